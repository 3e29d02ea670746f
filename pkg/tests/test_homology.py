import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import kronecker_point, random_rep, remark1_rep, small_dynkin
from oracles import hom_dim_sympy
from quivercm.errors import InputError, NotApplicableError
from quivercm.homology import (
    end_dim,
    ext1_dim,
    ext1_pair_dim,
    hom_dim,
    hom_space,
    invariant_report,
    is_orbit_closed,
    is_orbit_open,
    orbit_dim,
    pd_formula,
    pd_formula_caveat,
)
from quivercm.quiver import Representation, euler_form, linear_quiver, loop_quiver, vertex_end_dim

A2 = linear_quiver(2)
A3 = linear_quiver(3)


def rank1():
    return Representation(A2, [2, 2], [[[1, 0], [0, 0]]])


def interval():
    return Representation(A2, [1, 1], [[[1]]])


def test_hom_between_simples_vanishes():
    s1 = Representation.simple(A2, "1")
    s2 = Representation.simple(A2, "2")
    assert hom_dim(s1, s2) == 0
    assert hom_dim(s2, s1) == 0


def test_end_of_rank_one_point():
    assert end_dim(rank1()) == 5


def test_identity_in_end_of_nonzero():
    m = remark1_rep()
    space = hom_space(m, m)
    assert space.dimension >= 1
    ident = tuple(tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)) for d in m.dims)
    assert space.is_morphism(ident)


def test_basis_elements_are_morphisms():
    m = rank1()
    n = interval()
    for h in hom_space(n, m).basis:
        assert hom_space(n, m).is_morphism(h)


def test_end_examples():
    assert end_dim(Representation.simple(A3, "2")) == 1
    assert vertex_end_dim((3, 3)) == 18
    assert end_dim(Representation.zero(A3, [1, 1, 1])) == 3


def test_ext1_examples():
    assert ext1_dim(interval()) == 0
    assert ext1_dim(Representation.zero(A2, [1, 1])) == 1
    for v in A3.vertices:
        assert ext1_dim(Representation.simple(A3, v)) == 0


def test_ext1_needs_acyclic_quiver():
    with pytest.raises(NotApplicableError):
        ext1_dim(remark1_rep())


def test_orbit_dim_examples():
    assert orbit_dim(rank1()) == 3
    assert orbit_dim(Representation(A2, [2, 2], [[[1, 0], [0, 1]]])) == 4
    assert orbit_dim(Representation.zero(A3, [2, 1, 2])) == 0


def test_pd_formula_examples():
    assert pd_formula(Representation.zero(A2, [1, 1])) == 1
    assert pd_formula(Representation.zero(A3, [1, 1, 1])) == 2
    assert pd_formula(rank1()) == 1


def test_open_closed():
    assert is_orbit_open(interval()) and not is_orbit_closed(interval())
    z = Representation.zero(A2, [1, 1])
    assert is_orbit_closed(z) and not is_orbit_open(z)
    assert is_orbit_open(Representation.zero(A2, [0, 0]))
    assert not is_orbit_open(rank1()) and not is_orbit_closed(rank1())


def test_kronecker_point_values():
    m = kronecker_point()
    rep = invariant_report(m)
    assert rep.l == 18
    assert rep.end_dim == hom_dim_sympy(m, m) == 4
    assert rep.pd_formula == 4
    assert pd_formula_caveat(m.quiver) is not None
    assert pd_formula_caveat(A3) is None


def test_different_quivers_rejected():
    with pytest.raises(InputError):
        hom_dim(interval(), Representation.simple(A3, "1"))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_hom_dim_matches_sympy(seed):
    rng = random.Random(seed)
    q = small_dynkin(rng)
    dm = [rng.randint(0, 2) for _ in range(q.n)]
    dn = [rng.randint(0, 2) for _ in range(q.n)]
    m = random_rep(rng, q, dm, -1, 1)
    n = random_rep(rng, q, dn, -1, 1)
    assert hom_dim(m, n) == hom_dim_sympy(m, n)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_euler_form_is_hom_minus_ext(seed):
    rng = random.Random(seed)
    q = small_dynkin(rng)
    m = random_rep(rng, q, [rng.randint(0, 2) for _ in range(q.n)], -1, 1)
    n = random_rep(rng, q, [rng.randint(0, 2) for _ in range(q.n)], -1, 1)
    assert hom_dim(m, n) - ext1_pair_dim(m, n) == euler_form(q, m.dims, n.dims)
    assert ext1_pair_dim(m, m) == ext1_dim(m)


def test_hom_on_loop_quiver():
    m = remark1_rep()
    assert end_dim(m) == hom_dim_sympy(m, m) == 3
    z = Representation.zero(loop_quiver(2), [3])
    # a map to the zero module must kill the image of both loops
    assert hom_dim(m, z) == hom_dim_sympy(m, z) == 3
    assert hom_dim(z, m) == hom_dim_sympy(z, m)
