import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quivercm.errors import InputError
from quivercm.fields import GF, QQ
from quivercm.groebner.buchberger import buchberger, ideal_normal_form, is_groebner
from quivercm.groebner.hilbert import (
    dimension_from_kpoly,
    hilbert_dimension,
    hilbert_function,
    hilbert_numerator,
    kpolynomial,
)
from quivercm.groebner.polynomial import PolyRing, determinant, format_polynomial, minors
from quivercm.groebner.resolution import minimal_free_resolution, minimal_generators, resolve


def ring(n, field=QQ):
    return PolyRing(["x%d" % i for i in range(n)], field)


def test_parse_and_format():
    R = PolyRing(["x", "y"])
    p = R.parse("x^2 - 3/2*x*y + 4")
    assert format_polynomial(p) == "x^2 - 3/2*x*y + 4"
    assert R.parse(format_polynomial(p)) == p
    with pytest.raises(InputError):
        R.parse("x + z")


def test_reduced_basis_examples():
    R = PolyRing(["x", "y"])
    x, y = R.gens
    assert buchberger([x * x - y, y], R) == [x * x, y]
    f = R.parse("2*x^2 + 4*y")
    assert buchberger([f], R) == [f.monic()]
    assert buchberger([x, y], R) == [x, y]


def _to_sympy(p, syms):
    return sum(sympy.Rational(str(c)) * sympy.prod([s ** e for s, e in zip(syms, exps)]) for exps, c in p.terms.items())


def _from_sympy(expr, R):
    poly = sympy.Poly(expr, *sympy.symbols(R.names))
    out = R(0)
    for m, c in poly.terms():
        c = sympy.Rational(c)
        out = out + _monomial(R, m) * Fraction(int(c.p), int(c.q))
    return out


def _monomial(R, m):
    out = R(1)
    for v, e in zip(R.gens, m):
        out = out * v ** e
    return out


poly_terms = st.lists(
    st.tuples(st.integers(-3, 3), st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))), min_size=1, max_size=4
)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly_terms, min_size=1, max_size=3))
def test_groebner_matches_sympy(raw):
    R = PolyRing(["a", "b", "c"])
    gens = []
    for terms in raw:
        p = R(0)
        for c, e in terms:
            p = p + _monomial(R, e) * c
        gens.append(p)
    ours = buchberger(gens, R)
    assert is_groebner(ours, R)
    syms = sympy.symbols("a b c")
    nonzero = [_to_sympy(g, syms) for g in gens if g]
    if not nonzero:
        assert ours == []
        return
    theirs = sympy.groebner(nonzero, *syms, order="grevlex")
    assert sorted(map(str, ours)) == sorted(str(_from_sympy(g, R).monic()) for g in theirs.exprs)
    for g in gens:
        assert not ideal_normal_form(g, ours, R)


def test_groebner_over_prime_field():
    R = PolyRing(["x", "y"], GF(2))
    x, y = R.gens
    gb = buchberger([x * x + y, x * y + 1], R)
    assert is_groebner(gb, R)
    for g in (x * x + y, x * y + 1):
        assert not ideal_normal_form(g, gb, R)


def test_dimension_examples():
    R1 = ring(1)
    assert hilbert_dimension(buchberger([R1.gens[0]], R1), R1) == 0
    R = ring(4)
    a, b, c, d = R.gens
    assert hilbert_dimension(buchberger([a * d - b * c], R), R) == 3
    assert hilbert_dimension([], R) == 4
    assert hilbert_dimension(buchberger([R(1)], R), R) == -1


def test_kpolynomial_and_hilbert_function():
    # k[x,y]/(x^2, xy): series (1 + t - t^2 ... ) check against counting
    R = ring(2)
    x, y = R.gens
    gb = buchberger([x * x, x * y], R)
    k = hilbert_numerator(gb, R)
    assert k == kpolynomial([(2, 0), (1, 1)], 2) == [1, 0, -2, 1]
    assert dimension_from_kpoly(k, 2) == hilbert_dimension(gb, R) == 1
    assert [hilbert_function(gb, R, t) for t in range(5)] == [1, 2, 1, 1, 1]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_koszul_betti_numbers(k):
    from math import comb

    R = ring(k)
    b = minimal_free_resolution(R.gens, R)
    assert b.ranks() == [comb(k, i) for i in range(k + 1)] and b.pd == k


def test_determinantal_hypersurface():
    R = ring(4)
    a, b, c, d = R.gens
    table = minimal_free_resolution([a * d - b * c], R)
    assert table.ranks() == [1, 1] and table.pd == 1
    assert table.entries() == [[0, 0, 1], [1, 2, 1]]


def test_twisted_cubic():
    R = ring(4)
    a, b, c, d = R.gens
    m = [[a, b, c], [b, c, d]]
    gens = minors(m, 2, R)
    table = minimal_free_resolution(gens, R)
    assert table.entries() == [[0, 0, 1], [1, 2, 3], [2, 3, 2]]
    gb = buchberger(gens, R)
    assert table.alternating_sum() == hilbert_numerator(gb, R)


def test_redundant_generators_are_dropped():
    R = ring(2)
    x, y = R.gens
    gens = [x, y, x + y, x * y]
    assert len(minimal_generators(gens, R)) == 2
    assert minimal_free_resolution(gens, R).ranks() == [1, 2, 1]


def test_non_homogeneous_rejected():
    R = ring(2)
    x, y = R.gens
    with pytest.raises(InputError):
        resolve([x * x - y], R)


def test_unit_ideal_rejected():
    R = ring(2)
    with pytest.raises(InputError):
        resolve([R(1)], R)


def _matmul_polys(a, b, R):
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), R(0)) for j in range(cols)] for i in range(rows)]


def _random_homogeneous(rng, R, deg):
    from itertools import combinations_with_replacement

    p = R(0)
    for combo in combinations_with_replacement(range(R.nvars), deg):
        if rng.random() < 0.4:
            mono = R(1)
            for i in combo:
                mono = mono * R.gens[i]
            p = p + mono * rng.randint(-2, 2)
    return p


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_resolution_is_a_complex_and_matches_hilbert_series(seed):
    rng = random.Random(seed)
    R = ring(rng.randint(2, 4))
    gens = [_random_homogeneous(rng, R, rng.randint(1, 3)) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if g]
    if not gens:
        return
    res = resolve(gens, R)
    for i in range(2, len(res.differentials) + 1):
        prod = _matmul_polys(res.differential_polys(i - 1), res.differential_polys(i), R)
        assert all(not x for row in prod for x in row)
    table = res.betti
    assert table.pd <= R.nvars
    gb = buchberger(gens, R)
    assert table.alternating_sum() == hilbert_numerator(gb, R)
    assert dimension_from_kpoly(hilbert_numerator(gb, R), R.nvars) == hilbert_dimension(gb, R)


def test_determinant_and_minors():
    R = ring(4)
    a, b, c, d = R.gens
    assert determinant([[a, b], [c, d]], R) == a * d - b * c
    assert determinant([], R) == R(1)
    assert len(minors([[a, b, c], [b, c, d]], 2, R)) == 3


def test_betti_format_is_stable():
    R = ring(2)
    text = minimal_free_resolution(R.gens, R).format()
    assert text.splitlines()[1].split() == ["total:", "1", "2", "1"]
