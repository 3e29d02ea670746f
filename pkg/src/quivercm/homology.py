"""Hom spaces, Ext^1 and orbit dimensions by exact linear algebra.

For an acyclic quiver the path algebra is hereditary and the four-term
sequence

    0 -> End_Q(M) -> prod_i End(M_i) -> rep(Q, d) -> Ext^1(M, M) -> 0

gives ``dim Ext^1(M, M) = l - sum d_i^2 + dim End_Q(M)``. The codimension of
the orbit of M equals that number, and the same expression is the
projective-dimension prediction that the Groebner engine checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import InputError, VerificationError
from .quiver import Representation, classify, euler_form, rep_space_dim, require_acyclic, vertex_end_dim

__all__ = [
    "HomSpace",
    "InvariantReport",
    "hom_space",
    "hom_dim",
    "end_dim",
    "vertex_end_dim",
    "ext1_dim",
    "ext1_pair_dim",
    "orbit_dim",
    "pd_formula",
    "is_orbit_open",
    "is_orbit_closed",
    "invariant_report",
    "pd_formula_caveat",
]


@dataclass(frozen=True)
class HomSpace:
    source: Representation
    target: Representation
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_morphism(self, h) -> bool:
        return _is_morphism(self.source, self.target, h)


def _check_pair(m: Representation, n: Representation):
    if m.quiver != n.quiver:
        raise InputError("representations live on different quivers")
    if m.field != n.field:
        raise InputError("representations are over different fields (%s, %s)" % (m.field, n.field))


def _is_morphism(m, n, h) -> bool:
    F = m.field
    for k, f in enumerate(m.maps):
        s, t = m.quiver.ends(k)
        g = n.maps[k]
        left = linalg.matmul(h[t], f, F, cols=m.dims[s])
        right = linalg.matmul(g, h[s], F, cols=m.dims[s])
        if left != right:
            return False
    return True


def _intertwiner_system(m: Representation, n: Representation):
    """Coefficient matrix of (h_i) -> (h_t f_a - g_a h_s) and the unknown layout."""
    q = m.quiver
    F = m.field
    offsets = []
    total = 0
    for i in range(q.n):
        offsets.append(total)
        total += n.dims[i] * m.dims[i]

    def var(i, p, r):
        return offsets[i] + p * m.dims[i] + r

    rows = []
    zero = F.zero
    for k, f in enumerate(m.maps):
        s, t = q.ends(k)
        g = n.maps[k]
        for p in range(n.dims[t]):
            for c in range(m.dims[s]):
                row = [zero] * total
                # (h_t f)[p][c] = sum_r h_t[p][r] f[r][c]
                for r in range(m.dims[t]):
                    x = f[r][c]
                    if x:
                        j = var(t, p, r)
                        row[j] = row[j] + x
                # (g h_s)[p][c] = sum_r g[p][r] h_s[r][c]
                for r in range(n.dims[s]):
                    x = g[p][r]
                    if x:
                        j = var(s, r, c)
                        row[j] = row[j] - x
                if any(row):
                    rows.append(row)
    return rows, offsets, total


def hom_space(m: Representation, n: Representation) -> HomSpace:
    """Basis of Hom_Q(m, n) as tuples of vertex matrices ``h_i: m_i -> n_i``."""
    _check_pair(m, n)
    rows, offsets, total = _intertwiner_system(m, n)
    vectors = linalg.kernel(rows, total, m.field)
    basis = []
    for v in vectors:
        h = []
        for i in range(m.quiver.n):
            a, b = n.dims[i], m.dims[i]
            o = offsets[i]
            h.append(tuple(tuple(v[o + p * b + r] for r in range(b)) for p in range(a)))
        basis.append(tuple(h))
    return HomSpace(m, n, tuple(basis))


def hom_dim(m: Representation, n: Representation) -> int:
    _check_pair(m, n)
    rows, _, total = _intertwiner_system(m, n)
    return total - linalg.rank(rows, total, m.field)


def end_dim(m: Representation) -> int:
    return hom_dim(m, m)


def ext1_dim(m: Representation) -> int:
    """``l - sum d_i^2 + dim End_Q(m)``; acyclic quivers only."""
    require_acyclic(m.quiver, "ext1_dim")
    value = rep_space_dim(m.quiver, m.dims) - vertex_end_dim(m.dims) + end_dim(m)
    if value < 0:
        raise VerificationError("negative Ext^1 dimension %d" % value)
    return value


def ext1_pair_dim(m: Representation, n: Representation) -> int:
    """``dim Hom(m, n) - <dim m, dim n>``, the Ext^1 dimension for a pair."""
    require_acyclic(m.quiver, "ext1_pair_dim")
    return hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)


def orbit_dim(m: Representation) -> int:
    """Dimension of the orbit of m, with the stabilizer formula as cross-check."""
    require_acyclic(m.quiver, "orbit_dim")
    e = end_dim(m)
    l = rep_space_dim(m.quiver, m.dims)
    s = vertex_end_dim(m.dims)
    ext = l - s + e
    via_ext = l - ext
    via_stabilizer = s - e
    if via_ext != via_stabilizer:
        raise VerificationError("orbit dimension mismatch: %d vs %d" % (via_ext, via_stabilizer))
    return via_ext


def pd_formula(m: Representation) -> int:
    """Predicted projective dimension ``l + dim End_Q(m) - sum d_i^2``."""
    return rep_space_dim(m.quiver, m.dims) + end_dim(m) - vertex_end_dim(m.dims)


def is_orbit_open(m: Representation) -> bool:
    return ext1_dim(m) == 0


def is_orbit_closed(m: Representation) -> bool:
    """For acyclic quivers: m is semisimple iff every arrow acts by zero."""
    require_acyclic(m.quiver, "is_orbit_closed")
    return m.is_zero()


@dataclass(frozen=True)
class InvariantReport:
    l: int
    vertex_end_dim: int
    end_dim: int
    ext1_dim: int
    orbit_dim: int
    pd_formula: int
    orbit_open: bool
    orbit_closed: bool

    def as_dict(self) -> dict:
        return {
            "l": self.l,
            "vertex_end_dim": self.vertex_end_dim,
            "end_dim": self.end_dim,
            "ext1_dim": self.ext1_dim,
            "orbit_dim": self.orbit_dim,
            "pd_formula": self.pd_formula,
            "open": self.orbit_open,
            "closed": self.orbit_closed,
        }


def invariant_report(m: Representation) -> InvariantReport:
    require_acyclic(m.quiver, "invariant_report")
    l = rep_space_dim(m.quiver, m.dims)
    s = vertex_end_dim(m.dims)
    e = end_dim(m)
    ext = l - s + e
    pd = l + e - s
    if pd != ext:
        raise VerificationError("pd formula %d differs from Ext^1 dimension %d" % (pd, ext))
    if l - ext != s - e:
        raise VerificationError("orbit dimension mismatch")
    return InvariantReport(l, s, e, ext, l - ext, pd, ext == 0, m.is_zero())


def pd_formula_caveat(q) -> str | None:
    """Why the pd prediction may not equal the true projective dimension, if it might not."""
    c = classify(q)
    if c.tree:
        return None
    return (
        "quiver is not a tree: the orbit closure need not be a cone and the pd "
        "prediction is known to fail for some representations (e.g. on the Kronecker quiver); "
        "the value is reported, not asserted"
    )
