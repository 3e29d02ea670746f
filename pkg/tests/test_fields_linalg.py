from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quivercm import linalg
from quivercm.errors import InputError
from quivercm.fields import GF, QQ, ModP, RationalFunctionField, field_from_name

small = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_modp_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a * b == F(1)
    assert a / b == F(3) * F(3)
    assert -a == F(4)
    assert a ** 6 == F.one
    assert not F(7)


def test_field_names():
    assert field_from_name("q") is QQ
    assert field_from_name("F5") == GF(5)
    with pytest.raises(InputError):
        field_from_name("F6")
    with pytest.raises(InputError):
        field_from_name("R")


def test_rational_parse():
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    with pytest.raises(InputError):
        QQ.parse("1/0")
    with pytest.raises(InputError):
        QQ.parse("x")
    assert GF(5).parse("1/2") == ModP(3, 5)


def test_rational_functions_reduce():
    K = RationalFunctionField(QQ)
    t = K.gen
    f = (t * t - 1) / (t - 1)
    assert f == t + 1
    assert (t / t) == K.one
    assert not (t - t)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    ncols = len(rows[0])
    assert linalg.rank(rows, ncols, QQ) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_kernel(rows):
    ncols = len(rows[0])
    basis = linalg.kernel([[Fraction(x) for x in r] for r in rows], ncols, QQ)
    assert len(basis) == ncols - sympy.Matrix(rows).rank()
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_bareiss_rref_agrees_with_plain_gauss(rows):
    ncols = len(rows[0])
    frac = [[Fraction(x) for x in r] for r in rows]
    red, piv = linalg.rref(frac, ncols, QQ)
    red2, piv2 = linalg._gauss_echelon(frac, ncols, QQ, reduced=True)
    assert piv == piv2
    assert red[: len(piv)] == red2[: len(piv2)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_and_inverse(rows):
    frac = [[Fraction(x) for x in r] for r in rows]
    det = linalg.determinant(frac, QQ)
    assert det == sympy.Matrix(rows).det()
    if det:
        inv = linalg.inverse(frac, QQ)
        assert linalg.matmul(frac, inv, QQ) == linalg.identity(len(rows), QQ)
    else:
        with pytest.raises(ValueError):
            linalg.inverse(frac, QQ)


def test_rank_over_prime_field():
    F = GF(2)
    rows = [[F(1), F(1)], [F(1), F(1)]]
    assert linalg.rank(rows, 2, F) == 1
    rows3 = [[F(1), F(0), F(1)], [F(0), F(1), F(1)], [F(1), F(1), F(0)]]
    assert linalg.rank(rows3, 3, F) == 2


def test_kernel_without_rows_is_everything():
    assert linalg.kernel([], 3, QQ) == linalg.identity(3, QQ)


def test_matmul_with_empty_inner_dimension():
    a = [[], []]
    b = []
    assert linalg.matmul(a, b, QQ, cols=3) == [[0, 0, 0], [0, 0, 0]]


def test_solve():
    x = linalg.solve([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]], [Fraction(3), Fraction(5)], QQ)
    assert x == [Fraction(4, 5), Fraction(7, 5)]
