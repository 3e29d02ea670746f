"""Positive roots, indecomposables and orbit labels for Dynkin quivers.

Indecomposables are produced with reflection functors: the root is walked
down to a simple root along an admissible sequence of sinks, and the simple
representation found there is carried back up with the adjoint (source)
reflections.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import InputError, NotApplicableError, VerificationError
from .fields import QQ, Field
from .homology import hom_dim
from .quiver import Quiver, Representation, check_dims, classify, direct_sum

Root = tuple


@dataclass(frozen=True)
class OrbitLabel:
    """Isomorphism class of a representation: roots with multiplicities."""

    parts: tuple  # ((root, multiplicity), ...) in canonical root order
    dims: tuple

    @classmethod
    def from_counts(cls, counts, n: int) -> "OrbitLabel":
        items = sorted(((tuple(r), m) for r, m in dict(counts).items() if m), key=lambda rm: root_key(rm[0]))
        d = [0] * n
        for r, m in items:
            for i, x in enumerate(r):
                d[i] += m * x
        return cls(tuple(items), tuple(d))

    def counts(self) -> dict:
        return dict(self.parts)

    def roots(self) -> list:
        out = []
        for r, m in self.parts:
            out.extend([r] * m)
        return out

    def __str__(self):
        if not self.parts:
            return "0"
        pieces = []
        for r, m in self.parts:
            s = "(" + ",".join(map(str, r)) + ")"
            pieces.append(s if m == 1 else "%s^%d" % (s, m))
        return " + ".join(pieces)


def root_key(r) -> tuple:
    return (sum(r), tuple(r))


def _require_dynkin(q: Quiver):
    cls = classify(q)
    if cls.dynkin_type is None:
        raise NotApplicableError("quiver is not of Dynkin type")
    return cls


def _adjacency(q: Quiver):
    idx = {v: i for i, v in enumerate(q.vertices)}
    adj = [[0] * q.n for _ in range(q.n)]
    for a in q.arrows:
        i, j = idx[a.source], idx[a.target]
        adj[i][j] += 1
        adj[j][i] += 1
    return adj


def tits_form(q: Quiver, d) -> int:
    """Orientation-free quadratic form ``sum d_i^2 - sum_edges d_i d_j``."""
    d = check_dims(q, d)
    val = sum(x * x for x in d)
    for k in range(len(q.arrows)):
        s, t = q.ends(k)
        val -= d[s] * d[t]
    return val


def simple_reflection(q: Quiver, v: int, d) -> tuple:
    adj = _adjacency(q)
    d = list(d)
    d[v] = sum(adj[v][j] * d[j] for j in range(q.n)) - d[v]
    return tuple(d)


def positive_roots(q: Quiver) -> list:
    """All positive roots of the underlying Dynkin diagram, canonically sorted.

    Closure of the simple roots under simple reflections, keeping the
    nonnegative vectors.
    """
    _require_dynkin(q)
    return list(_positive_roots(q.n, tuple(map(tuple, _adjacency(q)))))


@lru_cache(maxsize=None)
def _positive_roots(n: int, adj: tuple) -> tuple:
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for r in frontier:
            for v in range(n):
                s = list(r)
                s[v] = sum(adj[v][j] * r[j] for j in range(n)) - r[v]
                s = tuple(s)
                if all(x >= 0 for x in s) and any(s) and s not in seen:
                    seen.add(s)
                    new.append(s)
        frontier = new
    return tuple(sorted(seen, key=root_key))


# --- reflection functors -------------------------------------------------------


def _block_offsets(dims_list):
    offs, tot = [], 0
    for x in dims_list:
        offs.append(tot)
        tot += x
    return offs, tot


def reflection_functor(q: Quiver, v: str, m: Representation):
    """Apply the reflection functor at ``v`` (a sink or a source of ``q``).

    At a sink the new space at ``v`` is the kernel of the sum map
    ``(+)_{a: i -> v} M_i -> M_v``; at a source it is the cokernel of
    ``M_v -> (+)_{a: v -> j} M_j``. Returns ``(reflected quiver, representation)``.
    """
    if m.quiver != q:
        raise InputError("representation is not over the given quiver")
    F = m.field
    incident = [k for k, a in enumerate(q.arrows) if v in (a.source, a.target)]
    if any(q.arrows[k].source == q.arrows[k].target for k in incident):
        raise NotApplicableError("loop at %r" % v)
    vi = q.index(v)
    newq = q.reverse_at(v)
    if q.is_sink(v):
        others = [q.ends(k)[0] for k in incident]
        offs, tot = _block_offsets([m.dims[i] for i in others])
        # sum map: n_v x tot, block k is f_k
        summap = [[F.zero] * tot for _ in range(m.dims[vi])]
        for b, k in enumerate(incident):
            f = m.maps[k]
            for r in range(m.dims[vi]):
                for c in range(m.dims[others[b]]):
                    summap[r][offs[b] + c] = f[r][c]
        if m.dims[vi]:
            ker = linalg.kernel(summap, tot, F)  # vectors of length tot
        else:
            ker = linalg.identity(tot, F)
        newdim = len(ker)
        dims = list(m.dims)
        dims[vi] = newdim
        maps = list(m.maps)
        for b, k in enumerate(incident):
            # new arrow v -> other: projection of the kernel onto block b
            i = others[b]
            maps[k] = [[ker[c][offs[b] + r] for c in range(newdim)] for r in range(m.dims[i])]
        return newq, Representation(newq, dims, maps, F)
    if q.is_source(v):
        others = [q.ends(k)[1] for k in incident]
        offs, tot = _block_offsets([m.dims[j] for j in others])
        stacked = [[F.zero] * m.dims[vi] for _ in range(tot)]
        for b, k in enumerate(incident):
            f = m.maps[k]
            for r in range(m.dims[others[b]]):
                for c in range(m.dims[vi]):
                    stacked[offs[b] + r][c] = f[r][c]
        # rows of proj span the annihilator of the image of ``stacked``
        if m.dims[vi]:
            proj = linalg.left_kernel(stacked, m.dims[vi], F)
        else:
            proj = linalg.identity(tot, F)
        newdim = len(proj)
        dims = list(m.dims)
        dims[vi] = newdim
        maps = list(m.maps)
        for b, k in enumerate(incident):
            j = others[b]
            maps[k] = [[proj[r][offs[b] + c] for c in range(m.dims[j])] for r in range(newdim)]
        return newq, Representation(newq, dims, maps, F)
    raise NotApplicableError("vertex %r is neither a sink nor a source" % v)


def admissible_sinks(q: Quiver) -> list:
    """Vertex order in which each vertex is a sink after reflecting the earlier ones."""
    remaining = list(q.vertices)
    order = []
    cur = q
    while remaining:
        v = next((w for w in remaining if cur.is_sink(w) or not any(w in (a.source, a.target) for a in cur.arrows)), None)
        if v is None:
            raise NotApplicableError("quiver has an oriented cycle")
        order.append(v)
        remaining.remove(v)
        cur = cur.reverse_at(v)
    return order


def indecomposable(q: Quiver, r, field: Field = QQ) -> Representation:
    """The indecomposable representation of dimension vector ``r``."""
    r = tuple(check_dims(q, r))
    if r not in set(positive_roots(q)):
        raise InputError("%s is not a positive root" % (r,))
    return _indecomposable(q, r, field)


@lru_cache(maxsize=4096)
def _indecomposable(q: Quiver, r: tuple, field: Field) -> Representation:
    seq = admissible_sinks(q)
    quivers = [q]
    sinks = []
    cur = r
    step = 0
    limit = 4 * len(positive_roots(q)) * q.n + 4
    while True:
        v = seq[step % q.n]
        vi = q.index(v)
        if cur == tuple(1 if j == vi else 0 for j in range(q.n)):
            break
        cur = simple_reflection(q, vi, cur)
        if any(x < 0 for x in cur):
            raise VerificationError("reflection left the positive roots")
        sinks.append(v)
        quivers.append(quivers[-1].reverse_at(v))
        step += 1
        if step > limit:
            raise VerificationError("root walk did not terminate")
    rep = Representation.simple(quivers[-1], v, field)
    for k in range(len(sinks) - 1, -1, -1):
        newq, rep = reflection_functor(quivers[k + 1], sinks[k], rep)
        if newq != quivers[k]:
            raise VerificationError("reflection did not restore the orientation")
    if rep.dims != r:
        raise VerificationError("constructed dimension vector %s, wanted %s" % (rep.dims, r))
    return rep


# --- Krull-Schmidt ---------------------------------------------------------------


@lru_cache(maxsize=64)
def hom_matrix(q: Quiver, field: Field = QQ) -> tuple:
    """``H[r][s] = dim Hom(X_r, X_s)`` over the canonically ordered roots."""
    roots = positive_roots(q)
    xs = [_indecomposable(q, r, field) for r in roots]
    return tuple(tuple(hom_dim(x, y) for y in xs) for x in xs)


def hom_vector(q: Quiver, m: Representation) -> list:
    """``[dim Hom(X_r, m) for r in positive_roots(q)]``."""
    return [hom_dim(_indecomposable(q, r, m.field), m) for r in positive_roots(q)]


def label_hom_vector(q: Quiver, label: OrbitLabel, field: Field = QQ) -> list:
    """Hom vector of the direct sum described by ``label``, read off H."""
    roots = positive_roots(q)
    pos = {r: i for i, r in enumerate(roots)}
    H = hom_matrix(q, field)
    out = [0] * len(roots)
    for s, mult in label.parts:
        j = pos[s]
        for i in range(len(roots)):
            out[i] += H[i][j] * mult
    return out


def decompose(m: Representation) -> OrbitLabel:
    """Multiplicities of the indecomposable summands of ``m``."""
    q = m.quiver
    _require_dynkin(q)
    roots = positive_roots(q)
    H = hom_matrix(q, m.field)
    h = hom_vector(q, m)
    mu = linalg.solve([[Fraction(x) for x in row] for row in H], [Fraction(x) for x in h], QQ)
    counts = {}
    for r, x in zip(roots, mu):
        if x.denominator != 1 or x < 0:
            raise VerificationError("non-integral or negative multiplicity %s for root %s" % (x, r))
        if x:
            counts[r] = int(x)
    label = OrbitLabel.from_counts(counts, q.n)
    if label.dims != m.dims:
        raise VerificationError("decomposition has dimension vector %s, expected %s" % (label.dims, m.dims))
    return label


def representation_of(q: Quiver, label: OrbitLabel, field: Field = QQ) -> Representation:
    """The direct sum of indecomposables described by ``label``."""
    parts = [_indecomposable(q, r, field) for r in label.roots()]
    return direct_sum(parts, quiver=q, field=field)


def enumerate_orbits(q: Quiver, d) -> list:
    """All orbit labels of dimension vector ``d``: multisets of roots summing to d."""
    _require_dynkin(q)
    d = check_dims(q, d)
    roots = positive_roots(q)
    out = []

    def rec(i, rest, chosen):
        if not any(rest):
            out.append(OrbitLabel.from_counts(Counter(chosen), q.n))
            return
        if i == len(roots):
            return
        r = roots[i]
        maxm = min((rest[j] // r[j] for j in range(q.n) if r[j]), default=0)
        for mult in range(maxm, -1, -1):
            nrest = tuple(rest[j] - mult * r[j] for j in range(q.n))
            rec(i + 1, nrest, chosen + [r] * mult)

    rec(0, d, [])
    out.sort(key=lambda lab: [root_key(r) for r in lab.roots()])
    return out
