from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import kronecker_point, random_rep, random_tree_quiver, remark1_rep
from quivercm.errors import InputError
from quivercm.fields import GF, QQ
from quivercm.formats import parse_quiver, parse_representation, serialize_quiver, serialize_representation
from quivercm.quiver import (
    Quiver,
    Representation,
    classify,
    conjugate,
    direct_sum,
    dynkin_quiver,
    euler_form,
    kronecker_quiver,
    linear_quiver,
    loop_quiver,
    rep_space_dim,
    scale_representation,
)


def test_parse_a2():
    q = parse_quiver("vertex 1\nvertex 2\narrow a: 1 -> 2")
    assert q.vertices == ("1", "2")
    assert [tuple(a) for a in q.arrows] == [("a", "1", "2")]


def test_two_loops_allowed():
    q = parse_quiver("vertex 1\narrow alpha: 1 -> 1\narrow beta: 1 -> 1\n")
    assert len(q.arrows) == 2


def test_dangling_endpoint():
    with pytest.raises(InputError):
        parse_quiver("vertex 1\nvertex 2\narrow a: 1 -> 3")


def test_duplicate_ids():
    with pytest.raises(InputError):
        Quiver(["1", "1"], [])
    with pytest.raises(InputError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


def test_bad_line_reports_line_number():
    with pytest.raises(InputError, match="line 2"):
        parse_quiver("vertex 1\nbogus line\n")


def test_kronecker_file():
    m = kronecker_point()
    text = serialize_representation(m, include_quiver=True)
    back = parse_representation(text)
    assert back == m
    assert rep_space_dim(m.quiver, m.dims) == 18


def test_zero_rep_valid():
    q = kronecker_quiver()
    z = Representation.zero(q, [2, 3])
    assert z.is_zero()


def test_shape_check():
    q = loop_quiver(1)
    with pytest.raises(InputError):
        Representation(q, [2], [[[0, 0], [0, 0], [0, 0]]])
    text = "vertex 1\narrow alpha: 1 -> 1\nfield Q\ndim 1 2\nmap alpha 3 2\n0 0\n0 0\n0 0\n"
    with pytest.raises(InputError, match="line 5"):
        parse_representation(text)


def test_missing_field_and_bad_entries():
    with pytest.raises(InputError):
        parse_representation("vertex 1\nvertex 2\narrow a: 1 -> 2\ndim 1 1\ndim 2 1\nmap a 1 1\n1\n")
    header = "vertex 1\nvertex 2\narrow a: 1 -> 2\nfield Q\ndim 1 1\ndim 2 1\nmap a 1 1\n"
    with pytest.raises(InputError, match="line 8"):
        parse_representation(header + "x\n")
    with pytest.raises(InputError, match="line 8"):
        parse_representation(header + "1/0\n")


def test_field_override_only_for_integers():
    q = linear_quiver(2)
    text = "field Q\ndim 1 1\ndim 2 1\nmap a1 1 1\n3\n"
    assert parse_representation(text, q, GF(2)).maps[0][0][0] == GF(2)(1)
    with pytest.raises(InputError):
        parse_representation("field Q\ndim 1 1\ndim 2 1\nmap a1 1 1\n1/3\n", q, GF(5))


def test_zero_dimension_vertex_needs_no_matrix():
    q = linear_quiver(2)
    m = parse_representation("field Q\ndim 1 0\ndim 2 2\n", q)
    assert m.dims == (0, 2)
    assert parse_representation(serialize_representation(m), q) == m


def test_classify_flags():
    assert classify(linear_quiver(2)).flags() == {
        "connected": True,
        "acyclic": True,
        "tree": True,
        "dynkin": "A2",
        "equioriented_a": True,
    }
    c = classify(loop_quiver(2))
    assert (c.connected, c.acyclic, c.tree, c.dynkin) == (True, False, False, None)
    c = classify(kronecker_quiver())
    assert (c.connected, c.acyclic, c.tree, c.dynkin) == (True, True, False, None)
    assert classify(dynkin_quiver("E", 6)).dynkin == "E6"
    assert classify(dynkin_quiver("D", 5)).dynkin == "D5"
    alt = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "3", "2")])
    assert classify(alt).dynkin == "A3" and not classify(alt).equioriented_a


def test_rep_space_dim():
    assert rep_space_dim(linear_quiver(2), (2, 2)) == 4
    assert rep_space_dim(kronecker_quiver(), (3, 3)) == 18
    assert rep_space_dim(dynkin_quiver("D", 4), (0, 0, 0, 0)) == 0


def test_euler_form():
    q = linear_quiver(2)
    assert euler_form(q, (1, 1), (1, 1)) == 1
    assert euler_form(q, (2, 2), (2, 2)) == 4
    assert euler_form(kronecker_quiver(), (3, 3), (3, 3)) == 0


def test_scaling():
    m = kronecker_point()
    assert scale_representation(m, 1) == m
    assert scale_representation(m, 0).is_zero()
    doubled = scale_representation(m, 2)
    assert doubled.map("alpha") == tuple(tuple(2 * x for x in row) for row in m.map("alpha"))
    assert doubled.map("beta") == tuple(tuple(2 * x for x in row) for row in m.map("beta"))


def test_conjugate_uses_target_times_map_times_source_inverse():
    q = linear_quiver(2)
    m = Representation(q, [1, 1], [[[1]]])
    g = [[[Fraction(2)]], [[Fraction(3)]]]
    assert conjugate(m, g).maps[0][0][0] == Fraction(3, 2)


def test_direct_sum_blocks():
    q = linear_quiver(2)
    a = Representation(q, [1, 1], [[[1]]])
    b = Representation.simple(q, "1")
    s = direct_sum([a, b])
    assert s.dims == (2, 1)
    assert s.maps[0] == ((1, 0),)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6), st.sampled_from(["Q", "F3"]))
def test_round_trip(n, seed, fname):
    import random

    rng = random.Random(seed)
    q = random_tree_quiver(rng, n)
    dims = [rng.randint(0, 2) for _ in range(n)]
    field = QQ if fname == "Q" else GF(3)
    m = random_rep(rng, q, dims, field=field)
    text = serialize_representation(m, include_quiver=True)
    assert parse_representation(text) == m
    assert serialize_representation(parse_representation(text), include_quiver=True) == text
    assert parse_quiver(serialize_quiver(q)) == q


def test_remark1_file_round_trip():
    m = remark1_rep()
    assert parse_representation(serialize_representation(m, include_quiver=True)) == m
