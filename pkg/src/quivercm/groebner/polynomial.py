"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a dict from exponent tuples to nonzero coefficients. Terms
are compared in degree-reverse-lexicographic order.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from ..errors import InputError
from ..fields import QQ, Field


@lru_cache(maxsize=None)
def degrevlex_key(exps: tuple) -> tuple:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomial_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


class PolyRing:
    """Polynomial ring over ``field`` in the named variables."""

    def __init__(self, names, field: Field = QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise InputError("duplicate variable names")
        self.field = field
        self.nvars = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names and self.field == other.field

    def __hash__(self):
        return hash((self.names, self.field))

    def __repr__(self):
        return "PolyRing(%s over %s)" % (", ".join(self.names), self.field)

    @property
    def zero_exps(self) -> tuple:
        return (0,) * self.nvars

    def __call__(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {self.zero_exps: c} if c else {})

    def var(self, name: str) -> "Poly":
        i = self._index[name]
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    @property
    def gens(self) -> list:
        return [self.var(n) for n in self.names]

    def index(self, name: str) -> int:
        return self._index[name]

    def parse(self, text: str) -> "Poly":
        return parse_polynomial(text, self)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring(other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (ValueError, TypeError):
            return False
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_monomial(self) -> tuple:
        return max(self.terms, key=degrevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = self.ring.field.one / self.leading_coefficient()
        return Poly(self.ring, {e: c * inv for e, c in self.terms.items()})

    def substitute(self, values: dict) -> "Poly":
        """Replace variables (by index) with field values."""
        out = {}
        for e, c in self.terms.items():
            coef = c
            ne = list(e)
            for i, val in values.items():
                if e[i]:
                    coef = coef * val ** e[i]
                    ne[i] = 0
            ne = tuple(ne)
            v = out.get(ne)
            v = coef if v is None else v + coef
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
        return Poly(self.ring, out)

    def __repr__(self):
        return format_polynomial(self)

    __str__ = __repr__


def format_polynomial(p: Poly) -> str:
    if not p.terms:
        return "0"
    F = p.ring.field
    pieces = []
    for e in sorted(p.terms, key=degrevlex_key, reverse=True):
        c = p.terms[e]
        mon = "*".join(
            (n if k == 1 else "%s^%d" % (n, k)) for n, k in zip(p.ring.names, e) if k
        )
        cs = F.format(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        if mon:
            body = mon if cs == "1" else "%s*%s" % (cs, mon)
        else:
            body = cs
        pieces.append(("-" if neg else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")


def parse_polynomial(text: str, ring: PolyRing) -> Poly:
    """Parse ``coef*var^e*...`` terms joined by ``+``/``-``."""
    s = text.strip()
    if not s:
        raise InputError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = _TERM_SPLIT.split(s)[1:]
    if len(parts) % 2:
        raise InputError("cannot parse polynomial %r" % text)
    total = ring(0)
    for sign, body in zip(parts[::2], parts[1::2]):
        if not body:
            raise InputError("dangling sign in %r" % text)
        coef = ring.field.one
        exps = [0] * ring.nvars
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise InputError("empty factor in %r" % text)
            if factor[0].isdigit():
                coef = coef * ring.field.parse(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in ring._index:
                raise InputError("unknown variable %r" % name)
            exps[ring._index[name]] += int(power) if power else 1
        term = Poly(ring, {tuple(exps): coef} if coef else {})
        total = total + term if sign == "+" else total - term
    return total


def determinant(matrix, ring: PolyRing) -> Poly:
    """Determinant of a square matrix of polynomials (division-free).

    Laplace expansion along rows with memoisation over column subsets, so
    the cost is ``O(2^n n)`` ring operations.
    """
    n = len(matrix)
    if n == 0:
        return ring(1)
    memo = {}

    def minor(row: int, cols: tuple) -> Poly:
        if row == n:
            return ring(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = ring(0)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = entry * minor(row + 1, rest)
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def minors(matrix, size: int, ring: PolyRing) -> list:
    """All ``size x size`` minors of a polynomial matrix (rows, cols in order)."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    out = []
    for rs in combinations(range(rows), size):
        for cs in combinations(range(cols), size):
            out.append(determinant([[matrix[r][c] for c in cs] for r in rs], ring))
    return out


def matmul(a, b, ring: PolyRing, cols: int | None = None):
    k = len(b)
    if cols is None:
        cols = len(b[0]) if b else 0
    out = []
    for row in a:
        out.append([sum((row[t] * b[t][j] for t in range(k)), ring(0)) for j in range(cols)])
    return out
