"""Homogeneity: is the orbit closure of M stable under scaling?

M is homogeneous exactly when ``lam * M`` is isomorphic to M for every
nonzero ``lam``. On a tree quiver this always holds, witnessed by scaling
each vertex by a power of ``lam``. Elsewhere we decide isomorphism with a
generic intertwiner: M and N are isomorphic over the algebraic closure iff
``sum_j t_j b_j`` is invertible for indeterminates ``t_j``, where ``b_j``
is a basis of Hom(M, N).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from . import linalg
from .errors import InputError
from .fields import RationalFunctionField
from .groebner.polynomial import PolyRing, determinant, format_polynomial
from .homology import hom_space
from .quiver import Quiver, Representation, change_field, check_dims, classify, conjugate, scale_representation

WITNESS_RANGE = range(2, 98)


@dataclass(frozen=True)
class VertexScaling:
    """Vertex i is scaled by ``lam ** exponents[i]``."""

    quiver: Quiver
    dims: tuple
    exponents: tuple
    lam: object

    def matrices(self, field) -> list:
        lam = field(self.lam)
        out = []
        for d, r in zip(self.dims, self.exponents):
            c = lam ** r if r >= 0 else field.one / lam ** (-r)
            out.append([[c if i == j else field.zero for j in range(d)] for i in range(d)])
        return out

    def apply(self, m: Representation) -> Representation:
        if m.quiver != self.quiver or m.dims != self.dims:
            raise InputError("representation does not match the scaling's quiver and dimension vector")
        return conjugate(m, self.matrices(m.field))


def scaling_exponents(q: Quiver) -> tuple:
    """Integers r with ``r[t] = r[s] + 1`` on every arrow; each component is rooted at exponent 0."""
    if not classify(q).tree:
        raise InputError("scaling exponents need a tree quiver")
    nb = {i: [] for i in range(q.n)}
    for k in range(len(q.arrows)):
        s, t = q.ends(k)
        nb[s].append((t, 1))
        nb[t].append((s, -1))
    r = [None] * q.n
    for root in range(q.n):
        if r[root] is not None:
            continue
        r[root] = 0
        todo = deque([root])
        while todo:
            v = todo.popleft()
            for w, step in nb[v]:
                if r[w] is None:
                    r[w] = r[v] + step
                    todo.append(w)
    return tuple(r)


def scaling_isomorphism(q: Quiver, d, lam) -> VertexScaling:
    """Vertex scalars conjugating any representation of dimension ``d`` to ``lam`` times it."""
    d = check_dims(q, d)
    if not lam:
        raise InputError("lambda must be nonzero")
    return VertexScaling(q, d, scaling_exponents(q), lam)


def _vertex_blocks(n: Representation):
    return [(i, d) for i, d in enumerate(n.dims) if d]


def _numeric_det_nonzero(space, n: Representation, coeffs) -> bool:
    F = n.field
    for i, d in _vertex_blocks(n):
        mat = [[F.zero] * d for _ in range(d)]
        for c, h in zip(coeffs, space.basis):
            if not c:
                continue
            c = F(c)
            block = h[i]
            for a in range(d):
                for b in range(d):
                    if block[a][b]:
                        mat[a][b] = mat[a][b] + c * block[a][b]
        if not linalg.determinant(mat, F):
            return False
    return True


def _symbolic_det_nonzero(space, n: Representation) -> bool:
    k = space.dimension
    ring = PolyRing(["t%d" % j for j in range(k)], n.field)
    ts = ring.gens
    for i, d in _vertex_blocks(n):
        mat = [[sum((ts[j] * h[i][a][b] for j, h in enumerate(space.basis) if h[i][a][b]), ring(0)) for b in range(d)] for a in range(d)]
        if not determinant(mat, ring):
            return False
    return True


def generic_determinants(m: Representation, n: Representation) -> list:
    """Per-vertex determinants of the generic intertwiner, as strings."""
    space = hom_space(m, n)
    k = space.dimension
    ring = PolyRing(["t%d" % j for j in range(k)], n.field)
    out = []
    for i, d in _vertex_blocks(n):
        mat = [[sum((ring.gens[j] * h[i][a][b] for j, h in enumerate(space.basis) if h[i][a][b]), ring(0)) for b in range(d)] for a in range(d)]
        out.append(format_polynomial(determinant(mat, ring)))
    return out


def is_isomorphic_generic(m: Representation, n: Representation) -> bool:
    """True iff a generic element of Hom(m, n) is invertible at every vertex."""
    if m.quiver != n.quiver:
        raise InputError("representations live on different quivers")
    if m.dims != n.dims:
        raise InputError("dimension vectors differ: %s vs %s" % (m.dims, n.dims))
    if not any(m.dims):
        return True
    space = hom_space(m, n)
    k = space.dimension
    if k == 0:
        return False
    # a nonzero value at any point proves the determinant polynomial is nonzero
    trials = [tuple(1 for _ in range(k))]
    trials += [tuple(j + 1 for j in range(k)), tuple((j + 1) ** 2 + 1 for j in range(k))]
    if k <= 3:
        trials += list(product(range(-1, 3), repeat=k))
    for coeffs in trials:
        if _numeric_det_nonzero(space, n, coeffs):
            return True
    return _symbolic_det_nonzero(space, n)


@dataclass(frozen=True)
class HomogeneityVerdict:
    kind: str  # "true-by-tree", "true-generic", "false", "inconclusive-generic-false"
    witness: int | None = None
    certificate: tuple = ()

    @property
    def homogeneous(self) -> bool | None:
        if self.kind.startswith("true"):
            return True
        if self.kind == "false":
            return False
        return None

    def as_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "homogeneous": self.homogeneous,
            "witness": self.witness,
            "certificate": list(self.certificate),
        }

    def describe(self) -> str:
        if self.kind == "true-by-tree":
            return "homogeneous (tree quiver: vertex scaling gives lambda*M = M)"
        if self.kind == "true-generic":
            return "homogeneous (lambda*M isomorphic to M for generic lambda)"
        if self.kind == "false":
            return "not homogeneous; witness λ=%d" % self.witness
        return "not isomorphic for generic lambda; no witness found in 2..97"


def is_homogeneous(m: Representation) -> HomogeneityVerdict:
    """Decide whether ``lam * m`` is isomorphic to ``m`` for all ``lam != 0``."""
    q = m.quiver
    if classify(q).tree:
        return HomogeneityVerdict("true-by-tree")
    if m.is_zero():
        return HomogeneityVerdict("true-generic")
    K = RationalFunctionField(m.field)
    mk = change_field(m, K)
    if is_isomorphic_generic(mk, scale_representation(mk, K.gen)):
        return HomogeneityVerdict("true-generic")
    for lam in WITNESS_RANGE:
        if m.field.characteristic and lam % m.field.characteristic == 0:
            continue
        if not is_isomorphic_generic(m, scale_representation(m, lam)):
            return HomogeneityVerdict("false", witness=lam)
    certificate = tuple(generic_determinants(mk, scale_representation(mk, K.gen)))
    return HomogeneityVerdict("inconclusive-generic-false", certificate=certificate)


def is_homogeneous_at(m: Representation, lam) -> bool:
    """Is ``lam * m`` isomorphic to ``m`` for this particular ``lam``?"""
    if not m.field(lam):
        raise InputError("lambda must be nonzero")
    return is_isomorphic_generic(m, scale_representation(m, lam))
