import json

import pytest

from helpers import d4_central_sink
from quivercm.degeneration import corollary1_check, degeneration_poset, export_dot, hom_leq, transitive_reduction
from quivercm.groebner.verify import rank_table
from quivercm.quiver import linear_quiver
from quivercm.roots import OrbitLabel, enumerate_orbits, representation_of

A2 = linear_quiver(2)
A3 = linear_quiver(3)


def label(q, counts):
    return OrbitLabel.from_counts(counts, q.n)


def test_hom_leq_examples():
    generic = label(A2, {(1, 1): 1})
    split = label(A2, {(1, 0): 1, (0, 1): 1})
    assert hom_leq(generic, split, A2)
    assert hom_leq(generic, generic, A2)
    assert not hom_leq(split, generic, A2)


def test_a2_chains():
    p = degeneration_poset(A2, (1, 1))
    assert len(p) == 2
    assert [a.pd_formula for a in p.annotations] == [1, 0]
    top, bottom = p.top(), p.bottom()
    assert p.annotations[top[0]].pd_formula == 0 and p.annotations[bottom[0]].pd_formula == 1
    p = degeneration_poset(A2, (2, 2))
    assert len(p) == 3 and len(p.covers) == 2


def test_zero_dimension_vector():
    p = degeneration_poset(A3, (0, 0, 0))
    assert len(p) == 1 and p.covers == ()
    assert corollary1_check(p).ok
    dot = export_dot(p)
    assert dot.count("[label=") == 1 and "->" not in dot


@pytest.mark.parametrize("n,dims", [(3, (1, 2, 1)), (3, (2, 2, 2)), (4, (1, 2, 2, 1)), (4, (1, 1, 1, 1))])
def test_hom_order_equals_rank_order(n, dims):
    # for equioriented A_n, degeneration is the rank order on all composites
    q = linear_quiver(n)
    labels = enumerate_orbits(q, dims)
    ranks = [rank_table(representation_of(q, lab)) for lab in labels]
    for i, a in enumerate(labels):
        for j, b in enumerate(labels):
            by_rank = all(ranks[j][k] <= ranks[i][k] for k in ranks[i])
            assert hom_leq(a, b, q) == by_rank


def test_orbit_dimension_strictly_drops():
    p = degeneration_poset(d4_central_sink(), (1, 1, 1, 2))
    for i, j in p.covers:
        assert p.annotations[j].orbit_dim < p.annotations[i].orbit_dim


def test_transitive_reduction_of_chain():
    leq = [[True, True, True], [False, True, True], [False, False, True]]
    assert transitive_reduction(leq) == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "q,dims", [(A2, (1, 1)), (A2, (2, 2)), (A3, (1, 1, 1)), (d4_central_sink(), (1, 1, 1, 2))]
)
def test_corollary_checks_pass(q, dims):
    p = degeneration_poset(q, dims)
    report = corollary1_check(p)
    assert report.ok
    assert len(report.closed_labels) == 1
    closed = p.labels[report.closed_labels[0]]
    assert all(sum(r) == 1 for r in closed.roots())


def test_export_formats():
    p = degeneration_poset(A2, (2, 2))
    dot = export_dot(p)
    assert dot.startswith("digraph degenerations {")
    assert dot.count("[label=") == 3 and dot.count("->") == 2
    data = json.loads(p.to_json())
    assert set(data) == {"quiver", "dim", "labels", "leq", "covers"}
    assert data["dim"] == [2, 2]
    assert p.to_json() == degeneration_poset(A2, (2, 2)).to_json()
