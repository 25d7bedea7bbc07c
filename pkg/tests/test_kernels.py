import itertools
import random

import pytest

from discokit import (DiscoveryInstance, Graph, InvalidArgument, IsdCaps, ResourceLimit, compute_domination_core,
                      isd_distance_truncate, isd_remove_petal, kernelize_dsd, kernelize_isd, kernelize_matd,
                      kernelize_vcd, quasi_wide_witness)
from discokit.graph import edge_distance, vertex_distance
from discokit.kernels import canonical_no
from discokit.kernels.matd import trim_layer

import oracles as O

P3 = Graph(3, [(0, 1), (1, 2)])


def star(leaves):
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def same_answer(inst, rep):
    return O.decide(inst) == O.decide(rep.kernel)


def dominates(n, adj, d):
    return all(v in d or adj[v] & d for v in range(n))


# ---------------------------------------------------------------- vertex cover

def test_vcd_rejects_a_large_matching():
    k = 2
    g = Graph(2 * (k * k + 1), [(2 * i, 2 * i + 1) for i in range(k * k + 1)])
    rep = kernelize_vcd(DiscoveryInstance("VC", g, [0, 2], 3))
    assert rep.rejected and rep.kernel == canonical_no("VC")
    assert not O.decide(rep.kernel)


def test_vcd_p3_keeps_its_answer():
    inst = DiscoveryInstance("VC", P3, [0], 1)
    rep = kernelize_vcd(inst)
    assert O.decide(rep.kernel) and O.decide(inst)
    assert rep.audit.satisfied and rep.audit.bound == 3 + 2


def test_vcd_keeps_high_degree_vertices_and_pads_them():
    k = 2
    g = star(10)
    rep = kernelize_vcd(DiscoveryInstance("VC", g, [3, 4], 4), k)
    assert 0 in rep.vertex_map
    assert rep.kernel.graph.degree(rep.vertex_map[0]) == k + 1
    assert same_answer(DiscoveryInstance("VC", g, [3, 4], 4), rep)


def test_vcd_rejects_the_wrong_problem():
    with pytest.raises(InvalidArgument, match="takes VC instances, got IS"):
        kernelize_vcd(DiscoveryInstance("IS", P3, [0], 1))


def test_vcd_random_equivalence_and_bound():
    rng = random.Random(41)
    for _ in range(150):
        inst = O.mixed(rng, O.planted_vc, "VC", 30, 4, 5)
        rep = kernelize_vcd(inst)
        assert same_answer(inst, rep)
        assert rep.rejected or rep.kernel.graph.n <= 3 * inst.k ** 2 + 2 * inst.k
        assert rep.kernel.budget <= inst.budget and rep.kernel.graph.n <= max(inst.graph.n, 2)


def test_tokens_map_to_tokens():
    rng = random.Random(42)
    for _ in range(60):
        inst = O.mixed(rng, O.planted_vc, "VC", 30, 4, 5)
        rep = kernelize_vcd(inst)
        if not rep.rejected:
            assert {rep.vertex_map[v] for v in inst.start.members} == set(rep.kernel.start.members)


# ---------------------------------------------------------------- matching

def test_matd_single_token_stays_within_three_layers():
    rng = random.Random(43)
    for _ in range(30):
        g = O.random_graph(rng, rng.randint(4, 10), 0.35)
        if not g.m:
            continue
        s = rng.choice(g.edge_list)
        inst = DiscoveryInstance("MAT", g, [s], rng.randint(0, 4))
        rep = kernelize_matd(inst)
        back = {w: v for v, w in rep.vertex_map.items()}
        for u, v in rep.kernel.graph.edge_list:
            e = (min(back[u], back[v]), max(back[u], back[v]))
            assert edge_distance(g, s, e) <= 3


def test_matd_star_is_trimmed_and_keeps_its_answer():
    k = 1
    g = star(8 * k * k + 4)
    inst = DiscoveryInstance("MAT", g, [(0, 1)], 2)
    rep = kernelize_matd(inst)
    assert rep.kernel.graph.m < g.m
    assert rep.audit.details["max_layer"] <= 8 * k * k
    assert same_answer(inst, rep)


def test_trim_layer_respects_the_threshold():
    layer = {(0, v) for v in range(1, 30)}
    kept, removed = trim_layer(layer, 1)
    assert len(kept) <= 8 and removed == 29 - len(kept)


def test_matd_random_equivalence():
    rng = random.Random(44)
    for _ in range(80):
        inst = O.mixed(rng, O.planted_mat, "MAT", 12, 3, 4)
        rep = kernelize_matd(inst)
        assert same_answer(inst, rep)
        assert rep.audit.satisfied


def test_matd_drops_token_free_components():
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    rep = kernelize_matd(DiscoveryInstance("MAT", g, [(0, 1)], 2))
    assert rep.kernel.graph.n == 3


# ---------------------------------------------------------------- independent set

def test_truncation_is_identity_on_small_diameter():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    rep = isd_distance_truncate(DiscoveryInstance("IS", g, [0], 2))
    assert rep.kernel.graph.n == 5 and rep.kernel.graph.m == 5


def test_truncation_cuts_a_long_path():
    n, k = 20, 1
    g = Graph(n, [(i, i + 1) for i in range(n - 1)])
    inst = DiscoveryInstance("IS", g, [0], 3)
    rep = isd_distance_truncate(inst)
    assert rep.kernel.graph.n == 3 * k + 1
    assert same_answer(inst, rep)


def test_petal_removal_on_a_star():
    g = star(5)
    inst = DiscoveryInstance("IS", g, [0], 2)
    rep = isd_remove_petal(inst, 0, 1)
    assert rep is not None and rep.kernel.graph.n == 5
    assert same_answer(inst, rep)


def test_petal_removal_needs_k_plus_one_petals():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert isd_remove_petal(DiscoveryInstance("IS", g, [0, 3], 2), 0, 1) is None


def test_petal_removal_terminates():
    g = star(12)
    inst = DiscoveryInstance("IS", g, [0], 2)
    sizes = [inst.graph.n]
    while (rep := isd_remove_petal(inst, 0, 1)) is not None:
        inst = rep.kernel
        sizes.append(inst.graph.n)
    assert sizes == sorted(sizes, reverse=True) and len(set(sizes)) == len(sizes)


def test_petal_removal_prefers_a_quiet_vertex():
    es = [(0, 1)] + [(0, v) for v in range(2, 6)] + [(1, v) for v in range(2, 6)] + [(2, 6)]
    inst = DiscoveryInstance("IS", Graph(7, es), [0, 1], 2)
    assert O.decide(inst)
    rep = isd_remove_petal(inst, 0, 1)
    assert rep is not None and 2 in rep.vertex_map and 3 not in rep.vertex_map
    assert O.decide(rep.kernel)


def test_quasi_wide_examples():
    g = Graph(6, [(0, 1), (2, 3), (4, 5)])
    X, B = quasi_wide_witness(g, {0, 2, 4}, 2, 3, 0)
    assert X == set() and B == {0, 2, 4}
    X, B = quasi_wide_witness(star(5), range(1, 6), 2, 5, 1)
    assert X == {0} and B == set(range(1, 6))
    k4 = Graph(4, list(itertools.combinations(range(4), 2)))
    assert quasi_wide_witness(k4, range(4), 1, 2, 0) is None
    with pytest.raises(ResourceLimit):
        quasi_wide_witness(Graph(12, [(i, (i + 1) % 12) for i in range(12)]), range(12), 1, 7, 0, cap=3)


def test_quasi_wide_results_are_r_independent():
    rng = random.Random(45)
    for _ in range(60):
        g = O.random_graph(rng, rng.randint(2, 9), 0.3)
        a = rng.sample(range(g.n), rng.randint(1, g.n))
        r, m, x = rng.randint(1, 2), rng.randint(1, 3), rng.randint(0, 1)
        found = quasi_wide_witness(g, a, r, m, x)
        if found:
            X, B = found
            rest, vmap = g.induced(set(range(g.n)) - X)
            assert len(X) <= x and B <= set(a) - X and len(B) >= m
            for u, v in itertools.combinations(B, 2):
                d = vertex_distance(rest, vmap[u], vmap[v])
                assert d is None or d > r


def test_isd_kernel_on_a_large_star():
    inst = DiscoveryInstance("IS", star(40), [0], 2)
    rep = kernelize_isd(inst)
    assert rep.kernel.graph.n <= 4
    assert same_answer(inst, rep)


def test_isd_kernel_audits_only_with_constants():
    inst = DiscoveryInstance("IS", star(6), [0], 2)
    assert kernelize_isd(inst).audit.satisfied is None
    rep = kernelize_isd(inst, caps=IsdCaps(x_cap=1, n2=lambda t: 2 * t, x2=1))
    assert rep.audit.bound == 1 + 9 * 2 * (2 * 2) and rep.audit.satisfied
    tight = kernelize_isd(inst, caps=IsdCaps(search_cap=1))
    assert "saturated" in tight.audit.note


def test_isd_random_equivalence():
    rng = random.Random(46)
    for _ in range(80):
        inst = O.mixed(rng, O.planted_is, "IS", 14, 3, 4)
        assert same_answer(inst, kernelize_isd(inst))


# ---------------------------------------------------------------- domination

def test_domination_core_examples():
    g = star(4)
    dc = compute_domination_core(g, 1)
    assert 0 in dc.core or len(dc.core) >= 2
    adj = O.adjacency(g.n, g.edges)
    for d in itertools.combinations(range(g.n), 1):
        d = set(d)
        if all(v in d or adj[v] & d for v in dc.core):
            assert dominates(g.n, adj, d)
    k = 2
    assert compute_domination_core(Graph(k + 2), k) is None
    assert compute_domination_core(P3, 1).k == 1


def test_domination_cores_are_sound_on_random_graphs():
    rng = random.Random(47)
    for _ in range(80):
        g = O.random_graph(rng, rng.randint(1, 8), 0.4)
        k = rng.randint(0, 3)
        dc = compute_domination_core(g, k)
        adj = O.adjacency(g.n, g.edges)
        any_dom = any(dominates(g.n, adj, set(d)) for s in range(k + 1)
                      for d in itertools.combinations(range(g.n), s))
        assert (dc is not None) == any_dom
        if dc is not None:
            for s in range(k + 1):
                for d in map(set, itertools.combinations(range(g.n), s)):
                    if all(v in d or adj[v] & d for v in dc.core):
                        assert dominates(g.n, adj, d)


def test_dsd_clamps_the_budget():
    k = 1
    inst = DiscoveryInstance("DS", star(3), [1], 50)
    rep = kernelize_dsd(inst)
    assert rep.kernel.budget == 3 * k * k + 2 * k
    assert kernelize_dsd(inst.with_budget(2)).kernel.budget == 2


def test_dsd_identity_when_everything_is_kept():
    inst = DiscoveryInstance("DS", P3, [0], 2)
    rep = kernelize_dsd(inst)
    assert rep.kernel.graph.edges == P3.edges and rep.kernel.budget == 2


def test_dsd_random_equivalence():
    rng = random.Random(48)
    for _ in range(60):
        inst = O.random_instance(rng, "DS", 10, 3, 4)
        assert same_answer(inst, kernelize_dsd(inst))


def test_kernels_are_deterministic():
    rng = random.Random(49)
    inst = O.planted_is(rng)
    assert kernelize_isd(inst) == kernelize_isd(inst)
    inst = O.planted_mat(rng)
    assert kernelize_matd(inst) == kernelize_matd(inst)
