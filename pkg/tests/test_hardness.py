"""Multicolored-clique, Hamiltonian-path and rainbow-matching constructions, and forward witnesses."""
import re
from math import comb

import pytest

from discokit import Graph, PreconditionError, validate, validate_sequence, verify_fvs
from discokit.gadgets import (MCCInstance, Orientation, compose_isd, compose_spd, compose_vcutd,
                              fvs_size, reduce_dsd, reduce_fvs, reduce_isd, reduce_vcd, solve_mcc, solve_rainbow,
                              witness_for, witness_from_clique, witness_from_hampath, witness_from_orientation,
                              witness_from_rainbow)

import oracles as O
from helpers import cycle_rainbow, hampath, mmo, single_edge

K2_2 = MCCInstance(Graph(4, [(0, 2), (1, 3)]), ((0, 1), (2, 3)))


# ---------------------------------------------------------------- fvs reductions

def test_fvs_dsd_example_budget_and_certificate():
    lc, cert = reduce_fvs("DS", K2_2)
    assert lc.instance.budget == 19
    assert len(cert) == 4 == fvs_size("DS", 2)
    assert verify_fvs(lc.graph, cert)
    assert O.is_acyclic(lc.graph.n, lc.graph.edges, cert.deleted)


@pytest.mark.parametrize("problem", ["VC", "IS", "DS"])
def test_fvs_certificates_are_exact_and_acyclic(problem):
    mcc = MCCInstance(Graph(6, [(0, 2), (2, 4), (0, 4), (1, 3)]), ((0, 1), (2, 3), (4, 5)))
    lc, cert = reduce_fvs(problem, mcc)
    want = {"DS": 4 * comb(3, 2), "VC": 8 * comb(3, 2), "IS": 5 * comb(3, 2) + 3}[problem]
    assert len(cert) == want
    assert O.is_acyclic(lc.graph.n, lc.graph.edges, cert.deleted)
    assert not O.is_acyclic(lc.graph.n, lc.graph.edges)
    assert validate(lc.pd, lc.graph)


@pytest.mark.parametrize("problem", ["VC", "IS", "DS"])
def test_fvs_clique_witness_validates(problem):
    lc, _ = reduce_fvs(problem, K2_2)
    seq = witness_from_clique(lc, solve_mcc(K2_2))
    assert validate_sequence(lc.instance, seq)
    assert seq.slides <= lc.instance.budget


def test_fvs_padding_and_preconditions():
    uneven = MCCInstance(Graph(3, [(0, 2)]), ((0, 1), (2,)))
    lc, _ = reduce_fvs("DS", uneven)
    assert lc.provenance.params["n"] == 2
    with pytest.raises(PreconditionError):
        reduce_fvs("DS", MCCInstance(Graph(2), ((0, 1),)))
    with pytest.raises(PreconditionError):
        reduce_fvs("MAT", K2_2)
    lc, _ = reduce_fvs("IS", K2_2)
    with pytest.raises(PreconditionError):
        witness_from_clique(lc, (0, 3))


# ---------------------------------------------------------------- shortest path

def test_spd_counts_and_budget():
    for n, t in ((3, 1), (3, 2), (4, 2)):
        p = Graph(n, [(i, i + 1) for i in range(n - 1)])
        lc = compose_spd([hampath(p)] * t)
        assert lc.instance.k == n + 2 and lc.instance.budget == n * n
        assert lc.graph.n == 2 + n + t * n * n + t * n * n * (n - 1)
        assert validate(lc.pd, lc.graph)


def test_spd_path_witness_moves_token_x_n_steps():
    n = 4
    lc = compose_spd([hampath(Graph(n, [(i, i + 1) for i in range(n - 1)]))])
    seq = witness_from_hampath(lc, (0, 1, 2, 3))
    assert validate_sequence(lc.instance, seq)
    assert seq.slides == n * n
    final = {lc.label(v) for v in seq.configs[-1].members}
    assert {f"H1/{x},{x}" for x in range(1, n + 1)} <= final


def test_spd_rejects_mismatch_and_non_paths():
    with pytest.raises(PreconditionError):
        compose_spd([hampath(Graph(2, [(0, 1)])), hampath(Graph(3, [(0, 1), (1, 2)]))])
    lc = compose_spd([hampath(Graph(3, [(0, 1)]))])
    with pytest.raises(PreconditionError):
        witness_from_hampath(lc, (0, 1, 2))


# ---------------------------------------------------------------- vertex cut

def test_vcut_budget_and_padding():
    c4 = cycle_rainbow([1, 2, 1, 2], 2)
    lc = compose_vcutd([c4, c4])
    assert lc.instance.budget == 1 + 2 * 2 * 3
    padded = compose_vcutd([c4] * 3)
    assert padded.provenance.params["t"] == 4 and len(padded.extra["sources"]) == 4
    with pytest.raises(PreconditionError):
        compose_vcutd([cycle_rainbow([1, 2, 1, 2], 1)])


def test_vcut_terminals_are_token_free():
    c4 = cycle_rainbow([1, 2, 1, 2], 2)
    lc = compose_vcutd([c4, c4])
    a, b = lc.instance.terminals
    assert a not in lc.instance.start.members and b not in lc.instance.start.members


@pytest.mark.parametrize("kappa", [2, 3])
@pytest.mark.parametrize("t", [1, 2])
def test_vcut_rainbow_witness_on_c6(kappa, t):
    c6 = cycle_rainbow([1, 2, 3, 1, 2, 3], kappa)
    matching = solve_rainbow(c6)
    lc = compose_vcutd([c6] * t)
    seq = witness_from_rainbow(lc, (t, matching))
    assert validate_sequence(lc.instance, seq)
    assert seq.slides <= lc.instance.budget


def test_vcut_rejects_non_rainbow_witness():
    c6 = cycle_rainbow([1, 2, 3, 1, 2, 3], 2)
    lc = compose_vcutd([c6])
    with pytest.raises(PreconditionError):
        witness_from_rainbow(lc, [(0, 1), (3, 4)])


# ---------------------------------------------------------------- orientation witnesses

def test_is_witness_on_single_edge_takes_four_slides():
    lc = reduce_isd(single_edge())
    seq = witness_from_orientation("isd-red", lc, Orientation({(0, 1): (0, 1)}))
    assert seq.slides == 4 and validate_sequence(lc.instance, seq)


def _donor_slides(lc, seq):
    """Slides per donor path index; a slide off the supplier s is charged to the path that refills s."""
    per, pending = {}, 0
    for a, b in zip(seq.configs, seq.configs[1:]):
        (left,) = a.members - b.members
        label = lc.label(left)
        m = re.fullmatch(r"d\w*:(\d+)", label)
        if label == "s":
            pending += 1
        elif m:
            i = int(m.group(1))
            per[i] = per.get(i, 0) + 1 + pending
            pending = 0
    return per


def test_donor_paths_use_three_slides_for_vertex_cover():
    inst = mmo(2, {(0, 1): 1}, 3)  # rn - sigma = 5 donor paths
    lc = reduce_vcd(inst)
    seq = witness_from_orientation("vcd-red", lc, Orientation({(0, 1): (0, 1)}))
    assert _donor_slides(lc, seq) == {i: 3 for i in range(1, 6)}


def test_donor_paths_use_four_slides_for_domination():
    inst = mmo(2, {(0, 1): 1}, 3)
    lc = reduce_dsd(inst)
    seq = witness_from_orientation("dsd-red", lc, Orientation({(0, 1): (0, 1)}))
    assert _donor_slides(lc, seq) == {i: 4 for i in range(1, 6)}
    assert validate_sequence(lc.instance, seq)


def test_witness_builders_refuse_infeasible_sources():
    heavy = single_edge(2, 1)
    lc = reduce_isd(heavy)
    with pytest.raises(PreconditionError):
        witness_from_orientation("isd-red", lc, Orientation({(0, 1): (0, 1)}))
    both_no = compose_isd([heavy, heavy])
    for j in (1, 2):
        with pytest.raises(PreconditionError):
            witness_for(both_no, (j, Orientation({(0, 1): (1, 0)})))
    with pytest.raises(PreconditionError):
        witness_from_orientation("dsd-red", lc, Orientation({(0, 1): (0, 1)}))


def test_composition_witness_uses_the_named_member():
    lc = compose_isd([single_edge(), single_edge()])
    seq = witness_for(lc, (2, Orientation({(0, 1): (1, 0)})))
    assert validate_sequence(lc.instance, seq)
    assert seq.slides <= lc.instance.budget
    moved = {lc.label(v) for c in seq.configs for v in c.members} - {lc.label(v) for v in lc.instance.start}
    assert not any(x.startswith("H1/") for x in moved)
