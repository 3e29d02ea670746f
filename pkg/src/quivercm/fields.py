"""Exact coefficient fields: the rationals, prime fields, and Q(t)/F_p(t).

Every scalar in the package is an element of one of these fields. Elements
support the ordinary Python arithmetic operators, so the linear algebra and
polynomial code is written once and runs over any of them.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class ModP:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError("mixing residues modulo different primes")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(1, self.p) / ModP(pow(self.v, -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d mod %d" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class Field:
    """Base class; concrete fields override the element hooks."""

    name = "?"
    characteristic = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, token: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, ModP):
            raise TypeError("cannot lift a residue to Q")
        return Fraction(x)

    def parse(self, token: str):
        if not _RATIONAL_RE.match(token):
            raise InputError("entry %r is not a rational number a or a/b" % token)
        num, _, den = token.partition("/")
        if den and int(den) == 0:
            raise InputError("zero denominator in entry %r" % token)
        return Fraction(int(num), int(den) if den else 1)


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise InputError("F%d: %d is not prime" % (p, p))
        self.p = p
        self.name = "F%d" % p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise ValueError("residue modulo %d is not in %s" % (x.p, self.name))
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    def parse(self, token: str):
        if not _RATIONAL_RE.match(token):
            raise InputError("entry %r is not an integer a or a fraction a/b" % token)
        num, _, den = token.partition("/")
        den = int(den) if den else 1
        if den % self.p == 0:
            raise InputError("zero denominator in entry %r over %s" % (token, self.name))
        return ModP(int(num) * pow(den, -1, self.p), self.p)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """``Q`` (any case) or ``F<p>``."""
    s = name.strip()
    if s.upper() == "Q":
        return QQ
    m = re.match(r"^[fF](\d+)$", s)
    if m:
        return PrimeField(int(m.group(1)))
    raise InputError("unknown field %r (expected Q or F<p>)" % name)


# --- univariate rational functions -------------------------------------------
#
# Q(t) and F_p(t) show up in exactly one place: deciding whether lambda*M and M
# are isomorphic for a generic scalar lambda.


def _ptrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return tuple(a)


def _padd(a, b):
    n = max(len(a), len(b))
    z = 0
    return _ptrim((a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n))


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [b[0] * 0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = a[shift + i] - c * y
        a = list(_ptrim(a))
    return _ptrim(q), tuple(a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


class RatFunc:
    """Element of K(t): a reduced quotient of univariate polynomials."""

    __slots__ = ("num", "den", "base")

    def __init__(self, num, den, base: Field, _reduced=False):
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            g = _pgcd(num, den) if num else (base.one,)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
            lead = den[-1]
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
            if not num:
                den = (base.one,)
        self.num = num
        self.den = den
        self.base = base

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, ModP)):
            c = self.base(other)
            return RatFunc((c,) if c else (), (self.base.one,), self.base, True)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(_padd(self.num, o.num), self.den, self.base)
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den), self.base)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, self.base, True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc((), (self.base.one,), self.base, True)
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den), self.base)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num), self.base)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return "(%s)/(%s)" % (_pformat(self.num, self.base), _pformat(self.den, self.base))


def _pformat(a, base):
    if not a:
        return "0"
    return " + ".join("%s*t^%d" % (base.format(c), i) for i, c in enumerate(a) if c)


class RationalFunctionField(Field):
    """K(t) for K = Q or F_p; ``gen`` is the transcendental t."""

    def __init__(self, base: Field):
        self.base = base
        self.name = "%s(t)" % base.name
        self.characteristic = base.characteristic

    def __call__(self, x):
        if isinstance(x, RatFunc):
            return x
        c = self.base(x)
        return RatFunc((c,) if c else (), (self.base.one,), self.base, True)

    @property
    def gen(self) -> RatFunc:
        return RatFunc((self.base.zero, self.base.one), (self.base.one,), self.base, True)
