"""Orbit-closure ideals for equioriented A_n and the end-to-end CM check.

For the chain ``v_0 -> v_1 -> ... -> v_{n-1}`` the orbit closure of M is cut
out by rank conditions: for every interval ``a < b`` the composite generic
matrix ``X_{b-1} ... X_a`` must have rank at most ``rank(f_{b-1} ... f_a)``.
The ideal is generated by the corresponding minors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .. import linalg
from ..errors import NotApplicableError, ScaleError, VerificationError
from ..fields import QQ, Field
from ..homology import invariant_report, orbit_dim, pd_formula
from ..quiver import Quiver, Representation, check_dims, classify, equioriented_chain, rep_space_dim
from .buchberger import buchberger
from .hilbert import hilbert_dimension
from .polynomial import PolyRing, format_polynomial, matmul, minors
from .resolution import BettiTable, minimal_free_resolution

MAX_VARIABLES = 12
MAX_GENERATORS = 200


def variable_name(arrow: str, i: int, j: int) -> str:
    return "x_%s_%d_%d" % (arrow, i, j)


def rep_ring(q: Quiver, d, field: Field = QQ) -> PolyRing:
    """k[rep(Q, d)]: one variable per matrix entry, arrows in file order, rows then columns."""
    d = check_dims(q, d)
    names = []
    for k, a in enumerate(q.arrows):
        s, t = q.ends(k)
        for i in range(1, d[t] + 1):
            for j in range(1, d[s] + 1):
                names.append(variable_name(a.name, i, j))
    return PolyRing(names, field)


def generic_matrices(q: Quiver, d, ring: PolyRing) -> list:
    d = check_dims(q, d)
    out = []
    for k, a in enumerate(q.arrows):
        s, t = q.ends(k)
        out.append([[ring.var(variable_name(a.name, i, j)) for j in range(1, d[s] + 1)] for i in range(1, d[t] + 1)])
    return out


@dataclass(frozen=True)
class Ideal:
    ring: PolyRing
    generators: tuple

    def __post_init__(self):
        seen = []
        for g in self.generators:
            if g and g not in seen:
                seen.append(g)
        object.__setattr__(self, "generators", tuple(seen))

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def as_dict(self) -> dict:
        return {
            "variables": list(self.ring.names),
            "field": self.ring.field.name,
            "generators": [format_polynomial(g) for g in self.generators],
        }


def check_scale(ring: PolyRing, ngens: int = 0):
    if ring.nvars > MAX_VARIABLES:
        raise ScaleError("%d variables exceeds the limit of %d" % (ring.nvars, MAX_VARIABLES))
    if ngens > MAX_GENERATORS:
        raise ScaleError("%d generators exceeds the limit of %d" % (ngens, MAX_GENERATORS))


def _composite_rank(m: Representation, arrows, a: int, b: int) -> int:
    F = m.field
    path_dims = None
    prod = None
    for k in arrows[a:b]:
        f = [list(row) for row in m.maps[k]]
        s, t = m.quiver.ends(k)
        if prod is None:
            prod = f
            path_dims = m.dims[s]
        else:
            prod = linalg.matmul(f, prod, F, cols=path_dims)
    return linalg.rank(prod, path_dims, F)


def rank_table(m: Representation) -> dict:
    """``{(a, b): rank of f_{b-1} ... f_a}`` over chain positions ``a < b``."""
    path, arrows = equioriented_chain(m.quiver)
    n = len(path)
    return {(a, b): _composite_rank(m, arrows, a, b) for a in range(n) for b in range(a + 1, n)}


def rank_conditions(m: Representation, prune: bool = True) -> list:
    """Intervals ``(a, b, r)`` whose rank bound is not implied by the others."""
    path, arrows = equioriented_chain(m.quiver)
    dims = [m.dims[m.quiver.index(v)] for v in path]
    ranks = rank_table(m)
    out = []
    for length in range(1, len(path)):
        for a in range(len(path) - length):
            b = a + length
            r = ranks[(a, b)]
            if r >= min(dims[a:b + 1]):
                continue
            if prune and any(r >= min(ranks[(a, k)], ranks[(k, b)]) for k in range(a + 1, b)):
                continue
            out.append((a, b, r))
    return out


def rank_condition_ideal(q: Quiver, m: Representation, prune: bool = True) -> Ideal:
    """Ideal of the orbit closure of ``m`` in k[rep(Q, d)] for equioriented A_n.

    Implied conditions are skipped when ``prune`` is set; the generated ideal
    is the same either way.
    """
    if m.quiver != q:
        raise NotApplicableError("representation is not over the given quiver")
    if not classify(q).equioriented_a:
        raise NotApplicableError("orbit-closure generators are only available for equioriented A_n")
    ring = rep_ring(q, m.dims, m.field)
    check_scale(ring)
    path, arrows = equioriented_chain(q)
    X = generic_matrices(q, m.dims, ring)
    gens = []
    for a, b, r in rank_conditions(m, prune):
        prod = None
        cols = m.dims[q.index(path[a])]
        for k in arrows[a:b]:
            prod = X[k] if prod is None else matmul(X[k], prod, ring, cols=cols)
        gens.extend(minors(prod, r + 1, ring))
    ideal = Ideal(ring, tuple(gens))
    check_scale(ring, len(ideal.generators))
    return ideal


@dataclass(frozen=True)
class CmReport:
    l: int
    field: str
    generators: int
    pd_resolution: int
    pd_formula: int
    dim: int
    depth: int
    ht: int
    grade: int
    cm: bool
    theorem3_equivalence_holds: bool
    auslander_buchsbaum_holds: bool
    perfect_ideal: bool
    orbit_dim: int
    betti: BettiTable
    assumptions: tuple = dc_field(
        default=(
            "rank-condition minors are taken to generate the full vanishing ideal of the orbit closure",
            "grade(I) is read as ht(I), valid because the polynomial ring is Cohen-Macaulay",
        )
    )

    def as_dict(self) -> dict:
        return {
            "l": self.l,
            "field": self.field,
            "generators": self.generators,
            "pd": self.pd_resolution,
            "pd_resolution": self.pd_resolution,
            "pd_formula": self.pd_formula,
            "dim": self.dim,
            "depth": self.depth,
            "ht": self.ht,
            "grade": self.grade,
            "cm": self.cm,
            "theorem3_equivalence_holds": self.theorem3_equivalence_holds,
            "auslander_buchsbaum_holds": self.auslander_buchsbaum_holds,
            "perfect_ideal": self.perfect_ideal,
            "orbit_dim": self.orbit_dim,
            "betti": self.betti.entries(),
            "assumptions": list(self.assumptions),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def verify_cm(q: Quiver, m: Representation) -> CmReport:
    """Resolve the orbit-closure ideal of ``m`` and compare pd with the formula."""
    ideal = rank_condition_ideal(q, m)
    ring = ideal.ring
    l = ring.nvars
    if l != rep_space_dim(q, m.dims):
        raise VerificationError("ring has %d variables, rep(Q,d) has dimension %d" % (l, rep_space_dim(q, m.dims)))
    gb = buchberger(ideal.generators, ring)
    dim = hilbert_dimension(gb, ring)
    expected = orbit_dim(m)
    if dim != expected:
        raise VerificationError(
            "orbit closure ideal has dimension %d but the orbit has dimension %d; generators are wrong" % (dim, expected)
        )
    betti = minimal_free_resolution(ideal.generators, ring)
    pd_res = betti.pd
    depth = l - pd_res
    ht = l - dim
    grade = ht
    cm = depth == dim
    formula = pd_formula(m)
    return CmReport(
        l=l,
        field=ring.field.name,
        generators=len(ideal.generators),
        pd_resolution=pd_res,
        pd_formula=formula,
        dim=dim,
        depth=depth,
        ht=ht,
        grade=grade,
        cm=cm,
        theorem3_equivalence_holds=(cm == (pd_res == formula)),
        auslander_buchsbaum_holds=(pd_res + depth == l),
        perfect_ideal=(grade == pd_res),
        orbit_dim=expected,
        betti=betti,
    )


@dataclass(frozen=True)
class SurveyRow:
    label: str
    roots: tuple
    pd_formula: int
    orbit_dim: int
    ext1_dim: int
    open: bool
    closed: bool

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "roots": [[list(r), k] for r, k in self.roots],
            "pd_formula": self.pd_formula,
            "orbit_dim": self.orbit_dim,
            "ext1_dim": self.ext1_dim,
            "open": self.open,
            "closed": self.closed,
        }


def pd_formula_survey(q: Quiver, d, field: Field = QQ) -> list:
    """Formula-side table over every orbit of rep(Q, d); no resolutions."""
    from ..roots import enumerate_orbits, representation_of

    rows = []
    for label in enumerate_orbits(q, d):
        rep = invariant_report(representation_of(q, label, field))
        rows.append(SurveyRow(str(label), label.parts, rep.pd_formula, rep.orbit_dim, rep.ext1_dim, rep.orbit_open, rep.orbit_closed))
    return rows
