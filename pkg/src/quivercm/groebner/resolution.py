"""Minimal graded free resolutions of R/I for homogeneous ideals I.

Each step computes the syzygies of the current generators by the usual
elimination trick: adjoin a tag vector ``e_j`` to the j-th generator and take
a position-over-term Groebner basis; the basis elements living purely in the
tag part generate the syzygy module. The syzygies are then thinned to a
minimal generating set degree by degree, so the resolution is minimal as it
is built and its ranks are the graded Betti numbers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..errors import InputError, VerificationError
from .buchberger import from_vec, groebner_module, lead, to_vec, vec_degree
from .polynomial import Poly, PolyRing


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``betti[i][j]`` of R/I; ``nvars`` is the ring size."""

    betti: dict
    nvars: int

    @property
    def pd(self) -> int:
        return max((i for i, row in self.betti.items() if any(row.values())), default=0)

    def ranks(self) -> list:
        return [sum(self.betti.get(i, {}).values()) for i in range(self.pd + 1)]

    def entries(self) -> list:
        """``[[i, j, value], ...]`` sorted, zeros omitted."""
        return [[i, j, v] for i in sorted(self.betti) for j, v in sorted(self.betti[i].items()) if v]

    def alternating_sum(self) -> list:
        """``sum_{i,j} (-1)^i beta_ij t^j`` as a coefficient list."""
        top = max((j for _, j, _ in self.entries()), default=0)
        out = [0] * (top + 1)
        for i, j, v in self.entries():
            out[j] += (-1) ** i * v
        while out and out[-1] == 0:
            out.pop()
        return out

    def format(self) -> str:
        """Betti diagram: column i, row j - i."""
        entries = self.entries()
        if not entries:
            return "(zero module)"
        pd = self.pd
        rows = sorted({j - i for i, j, _ in entries})
        lookup = {(i, j): v for i, j, v in entries}
        width = max(len(str(v)) for _, _, v in entries) + 1
        head = "      " + "".join(str(i).rjust(width) for i in range(pd + 1))
        lines = [head, "total:" + "".join(str(r).rjust(width) for r in self.ranks())]
        for r in rows:
            cells = [lookup.get((i, i + r), 0) for i in range(pd + 1)]
            lines.append(("%d:" % r).rjust(6) + "".join((str(c) if c else ".").rjust(width) for c in cells))
        return "\n".join(lines)


@dataclass
class FreeResolution:
    ring: PolyRing
    differentials: list  # differentials[i-1]: images of the basis of F_i in F_{i-1}
    shifts: list  # shifts[i]: degrees of the basis vectors of F_i
    betti: BettiTable

    def differential_polys(self, i: int) -> list:
        """Matrix of the differential F_i -> F_{i-1} with polynomial entries (rows index F_{i-1})."""
        cols = self.differentials[i - 1]
        nrows = len(self.shifts[i - 1])
        mat = [[self.ring(0) for _ in cols] for _ in range(nrows)]
        for c, vec in enumerate(cols):
            per = {}
            for (p, e), coef in vec.items():
                per.setdefault(p, {})[e] = coef
            for p, terms in per.items():
                mat[p][c] = Poly(self.ring, terms)
        return mat


def _minimal_subset(vecs, one, shifts):
    run = groebner_module(vecs, one, shifts)
    return [vecs[k] for k in run.minimal_inputs]


def resolve(gens, ring: PolyRing) -> FreeResolution:
    """Minimal graded free resolution of ``R / (gens)``."""
    gens = [g for g in gens if g]
    for g in gens:
        if not g.is_homogeneous():
            raise InputError("generator %s is not homogeneous" % g)
    one = ring.field.one
    zero_exps = ring.zero_exps
    prev_shifts = [0]
    current = _minimal_subset([to_vec(g) for g in gens], one, prev_shifts)
    if any(sum(lead(v)[1]) == 0 for v in current):
        raise InputError("unit ideal: the quotient ring is zero")
    betti = {0: {0: 1}}
    differentials = []
    shifts = [prev_shifts]
    level = 1
    while current:
        if level > ring.nvars + 1:
            raise VerificationError("resolution longer than the number of variables")
        degs = [vec_degree(v, prev_shifts) for v in current]
        betti[level] = dict(sorted(Counter(degs).items()))
        differentials.append(current)
        shifts.append(degs)
        n = len(prev_shifts)
        tagged = []
        for j, v in enumerate(current):
            w = dict(v)
            w[(n + j, zero_exps)] = one
            tagged.append(w)
        run = groebner_module(tagged, one, prev_shifts + degs)
        syz = []
        for v in run.basis:
            if lead(v)[0] >= n:
                syz.append({(p - n, e): c for (p, e), c in v.items()})
        current = _minimal_subset(syz, one, degs) if syz else []
        prev_shifts = degs
        level += 1
    table = BettiTable(betti, ring.nvars)
    if table.pd > ring.nvars:
        raise VerificationError("projective dimension %d exceeds %d variables" % (table.pd, ring.nvars))
    return FreeResolution(ring, differentials, shifts, table)


def minimal_free_resolution(gens, ring: PolyRing) -> BettiTable:
    return resolve(gens, ring).betti


def minimal_generators(gens, ring: PolyRing) -> list:
    """A minimal homogeneous generating subset of the ideal."""
    gens = [g for g in gens if g]
    for g in gens:
        if not g.is_homogeneous():
            raise InputError("generator %s is not homogeneous" % g)
    vecs = [to_vec(g) for g in gens]
    return [from_vec(v, ring) for v in _minimal_subset(vecs, ring.field.one, [0])]
