import random

import pytest
from hypothesis import given, settings, strategies as st

from discokit import FvsCertificate, Graph, InvalidArgument, PathDecomposition, make_nice, validate, verify_fvs
from discokit.pathdecomp import find_cycle, from_vertex_order, is_nice, width

import oracles as O

P3 = Graph(3, [(0, 1), (1, 2)])
TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_single_bag_is_always_valid():
    rng = random.Random(3)
    for _ in range(20):
        g = O.random_graph(rng, rng.randint(1, 8), 0.5)
        assert validate(PathDecomposition([range(g.n)]), g)


def test_p3_examples():
    pd = PathDecomposition([{0, 1}, {1, 2}])
    assert validate(pd, P3) and width(pd) == 1
    bad = validate(PathDecomposition([{0, 1}, {2}]), P3)
    assert not bad
    assert bad.condition == "ii" and bad.witness == (1, 2) and "1-2 uncovered" in bad.message


def test_violations_name_the_condition():
    assert validate(PathDecomposition([{0, 1}]), P3).condition == "i"
    broken = PathDecomposition([{0, 1}, {1, 2}, {0}])
    assert validate(broken, P3).condition == "iii"


def test_width_examples():
    assert width(PathDecomposition([{0, 1}, {1, 2}])) == 1
    assert width(PathDecomposition([range(7)])) == 6
    with pytest.raises(InvalidArgument):
        width(PathDecomposition([]))


def test_make_nice_examples():
    nice = make_nice(PathDecomposition([{0, 1}, {1, 2}]), P3)
    assert [set(b) for b in nice] == [set(), {0}, {0, 1}, {1}, {1, 2}, {2}, set()]
    assert width(nice) == 1
    one = make_nice(PathDecomposition([{0, 1, 2}]), TRIANGLE)
    assert len(one) == 7 and width(one) == 2
    assert [set(b) for b in make_nice(nice, P3)] == [set(b) for b in nice]


def test_make_nice_rejects_invalid_input():
    with pytest.raises(InvalidArgument):
        make_nice(PathDecomposition([{0, 1}, {2}]), P3)


def test_fvs_examples():
    tree = Graph(4, [(0, 1), (1, 2), (1, 3)])
    assert verify_fvs(tree, FvsCertificate(set()))
    assert verify_fvs(TRIANGLE, FvsCertificate({0}))
    bad = verify_fvs(TRIANGLE, FvsCertificate(set()))
    assert not bad and bad.witness[0] == bad.witness[-1] and sorted(bad.witness[:-1]) == [0, 1, 2]


def test_find_cycle_returns_a_real_cycle():
    rng = random.Random(5)
    for _ in range(200):
        g = O.random_graph(rng, rng.randint(1, 9), 0.3)
        cyc = find_cycle(g)
        assert (cyc is None) == O.is_acyclic(g.n, g.edges)
        if cyc:
            assert cyc[0] == cyc[-1] and len(set(cyc)) == len(cyc) - 1 >= 3
            assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:]))


orders = st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
             max_size=18).map(lambda es: Graph(n, es)),
    st.permutations(range(n))))


@settings(max_examples=150, deadline=None)
@given(orders)
def test_vertex_order_decompositions_validate_and_stay_valid_when_made_nice(case):
    g, order = case
    pd = from_vertex_order(g, order)
    assert validate(pd, g)
    nice = make_nice(pd, g)
    assert validate(nice, g) and is_nice(nice) and width(nice) == width(pd)
    for a, b in zip(nice, list(nice)[1:]):
        assert len(set(a) ^ set(b)) == 1
