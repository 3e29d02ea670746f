"""Exact dense linear algebra over the fields in :mod:`quivercm.fields`.

Matrices are lists (or tuples) of rows. Over Q the elimination is
fraction-free (Bareiss) on an integer rescaling of the rows; over every other
field it is ordinary Gauss-Jordan elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .fields import QQ, Field


def zeros(rows: int, cols: int, field: Field):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(n: int, field: Field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def matmul(a, b, field: Field, cols: int | None = None):
    """Product of an r x k and a k x c matrix.

    ``cols`` must be given when k = 0, since c cannot be read off ``b`` then.
    """
    rows = len(a)
    k = len(b)
    if cols is None:
        cols = len(b[0]) if b else 0
    z = field.zero
    out = []
    for i in range(rows):
        ai = a[i]
        row = []
        for j in range(cols):
            s = z
            for t in range(k):
                x = ai[t]
                if x:
                    s = s + x * b[t][j]
            row.append(s)
        out.append(row)
    return out


def transpose(a, cols: int | None = None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def bareiss_echelon(rows, ncols: int):
    """Fraction-free row echelon form of an integer matrix.

    Returns ``(echelon, pivots)``. Every division is exact; entries below the
    processed pivots are minors of the input, which keeps them bounded.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        mr = m[r]
        for i in range(r + 1, nrows):
            mi = m[i]
            a = mi[c]
            for j in range(c + 1, ncols):
                mi[j] = (piv * mi[j] - a * mr[j]) // prev
            mi[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _gauss_echelon(rows, ncols: int, field: Field, reduced: bool = True):
    m = [list(r) for r in rows]
    nrows = len(m)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.one / m[r][c]
        mr = [x * inv for x in m[r]]
        m[r] = mr
        for i in range(nrows):
            if i == r:
                continue
            if not reduced and i < r:
                continue
            a = m[i][c]
            if a:
                mi = m[i]
                for j in range(c, ncols):
                    if mr[j]:
                        mi[j] = mi[j] - a * mr[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(rows, ncols: int, field: Field):
    """Reduced row echelon form ``(rows, pivots)`` over ``field``."""
    if field == QQ:
        ech, piv = bareiss_echelon(_integer_rows(rows), ncols)
        return _reduce_integer_echelon(ech, piv, ncols), piv
    return _gauss_echelon(rows, ncols, field)


def _reduce_integer_echelon(ech, pivots, ncols):
    out = [[Fraction(x) for x in row] for row in ech]
    for r in range(len(out) - 1, -1, -1):
        c = pivots[r]
        inv = 1 / out[r][c]
        out[r] = [x * inv for x in out[r]]
        for i in range(r):
            a = out[i][c]
            if a:
                out[i] = [x - a * y for x, y in zip(out[i], out[r])]
    return out


def rank(rows, ncols: int, field: Field) -> int:
    if not rows or ncols == 0:
        return 0
    if field == QQ:
        return len(bareiss_echelon(_integer_rows(rows), ncols)[1])
    return len(_gauss_echelon(rows, ncols, field, reduced=False)[1])


def kernel(rows, ncols: int, field: Field):
    """Basis of ``{x : A x = 0}``, one vector per free column.

    The basis is the canonical one attached to the reduced echelon form, so
    it does not depend on the elimination path.
    """
    if not rows:
        basis = identity(ncols, field)
        return basis
    red, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def left_kernel(rows, ncols: int, field: Field):
    """Basis of ``{y : y A = 0}`` for an ``len(rows) x ncols`` matrix."""
    return kernel(transpose(rows, ncols), len(rows), field)


def solve(a, b, field: Field):
    """Unique solution of the square system ``a x = b``; ValueError otherwise."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    red, pivots = rref(aug, n + 1, field)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(a, field: Field):
    n = len(a)
    aug = [list(a[i]) + ident for i, ident in enumerate(identity(n, field))]
    red, pivots = rref(aug, 2 * n, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is not invertible")
    return [row[n:] for row in red]


def determinant(a, field: Field):
    """Determinant by Gaussian elimination (any field)."""
    n = len(a)
    m = [list(r) for r in a]
    det = field.one
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return field.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det = det * m[c][c]
        inv = field.one / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det
