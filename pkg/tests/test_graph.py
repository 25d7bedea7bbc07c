import itertools

import pytest
from hypothesis import given, settings, strategies as st

from discokit import Graph, InvalidArgument, edge_id
from discokit.graph import (connected_components, distance_layer, edge_distance, neighbors, shortest_path,
                            vertex_distance)

import oracles as O

TRIANGLE = Graph(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph(3, [(0, 1), (1, 2)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])


def test_graph_rejects_self_loops_and_bad_ids():
    with pytest.raises(InvalidArgument):
        Graph(2, [(0, 0)])
    with pytest.raises(InvalidArgument):
        Graph(2, [(0, 2)])


def test_duplicate_edges_collapse_to_canonical_pairs():
    g = Graph(2, [(1, 0), (0, 1)])
    assert g.m == 1 and g.edge_list == ((0, 1),)
    assert edge_id(5, 2) == (2, 5)
    with pytest.raises(InvalidArgument):
        edge_id(3, 3)


def test_neighbors_examples():
    assert neighbors(TRIANGLE, 0) == {1, 2}
    assert neighbors(Graph(1), 0) == set()
    assert neighbors(P3, 1) == {0, 2}
    assert neighbors(P3, 1, closed=True) == {0, 1, 2}
    with pytest.raises(InvalidArgument):
        neighbors(P3, 3)


def test_vertex_distance_examples():
    assert all(vertex_distance(C6, v, v) == 0 for v in range(6))
    assert vertex_distance(P4, 0, 3) == 3
    assert vertex_distance(Graph(2), 0, 1) is None


def test_edge_distance_examples():
    assert edge_distance(P3, (0, 1), (0, 1)) == 0
    assert edge_distance(P3, (0, 1), (1, 2)) == 1
    assert edge_distance(Graph(4, [(0, 1), (2, 3)]), (0, 1), (2, 3)) is None
    with pytest.raises(InvalidArgument):
        edge_distance(P3, (0, 1), (0, 2))


def test_distance_layer_examples():
    star = Graph(5, [(0, v) for v in range(1, 5)])
    assert distance_layer(star, 0, 1) == {1, 2, 3, 4}
    assert distance_layer(star, 2, 0) == {2}
    assert distance_layer(C6, 0, 3) == {3}
    assert distance_layer(P4, (0, 1), 2) == {(2, 3)}


def test_components_and_shortest_path():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert sorted(map(sorted, connected_components(g))) == [[0, 1, 2], [3, 4]]
    assert shortest_path(g, 0, 2) == [0, 1, 2]
    assert shortest_path(g, 0, 4) is None


graphs = st.integers(1, 9).flatmap(lambda n: st.builds(
    lambda es: Graph(n, es),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
             max_size=20)))


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_distance_is_symmetric_and_matches_reference_bfs(g):
    adj = O.adjacency(g.n, g.edges)
    for u in range(g.n):
        ref = O.hop_distances(adj, u)
        for v in range(g.n):
            assert vertex_distance(g, u, v) == vertex_distance(g, v, u) == ref.get(v)


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_layers_partition_the_component(g):
    for s in range(g.n):
        seen = set()
        i = 0
        while layer := distance_layer(g, s, i):
            assert not layer & seen
            seen |= layer
            i += 1
        assert seen == set(O.hop_distances(O.adjacency(g.n, g.edges), s))


@settings(max_examples=150, deadline=None)
@given(graphs)
def test_neighbors_agree_with_edges(g):
    for u, v in itertools.permutations(range(g.n), 2):
        assert (u in neighbors(g, v)) == (edge_id(u, v) in g.edges)


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_edge_distance_is_line_graph_distance(g):
    es = g.edge_list
    line = O.adjacency(len(es), [(i, j) for i, j in itertools.combinations(range(len(es)), 2)
                                 if set(es[i]) & set(es[j])])
    for i, e in enumerate(es):
        ref = O.hop_distances(line, i)
        for j, f in enumerate(es):
            assert edge_distance(g, e, f) == ref.get(j)
