"""Source-instance builders shared by the construction tests."""
from __future__ import annotations

import itertools

from discokit import Graph
from discokit.gadgets import HamPathInstance, MCCInstance, MMOInstance, RainbowInstance
from discokit.pathdecomp import from_vertex_order


def mmo(n, weighted_edges, r, order=None):
    """weighted_edges: {(u, v): weight}."""
    g = Graph(n, weighted_edges)
    pd = from_vertex_order(g, range(n) if order is None else order)
    return MMOInstance(g, pd, weighted_edges, r)


def single_edge(sigma=1, r=1):
    return mmo(2, {(0, 1): sigma}, r)


def random_mmo(rng, n_max=6, m_max=8, pw_max=2, w_max=2):
    """Random weighted graph whose natural vertex order has width <= pw_max."""
    while True:
        n = rng.randint(2, n_max)
        pairs = list(itertools.combinations(range(n), 2))
        es = rng.sample(pairs, rng.randint(1, min(m_max, len(pairs))))
        order = list(range(n))
        rng.shuffle(order)
        inst = mmo(n, {e: rng.randint(1, w_max) for e in es}, 1, order)
        if inst.pd.width <= pw_max:
            sigma = inst.total_weight
            r = -(-sigma // n) + rng.randint(0, 1)
            return MMOInstance(inst.h, inst.pd, inst.sigma, r)


def sibling(rng, inst):
    """Another MMO instance in the same equivalence class (same n, m, total weight, r)."""
    pairs = list(itertools.combinations(range(inst.n), 2))
    while True:
        es = rng.sample(pairs, inst.m)
        ws = list(inst.sigma.values())
        rng.shuffle(ws)
        order = list(range(inst.n))
        rng.shuffle(order)
        g = Graph(inst.n, es)
        cand = MMOInstance(g, from_vertex_order(g, order), dict(zip(g.edge_list, ws)), inst.r)
        if cand.pd.width <= max(2, inst.pd.width):
            return cand


def all_mcc(kappa, n):
    """Every MCC instance with kappa classes of size n (edges only between classes)."""
    classes = tuple(tuple(range(i * n, (i + 1) * n)) for i in range(kappa))
    cross = [(u, v) for a, b in itertools.combinations(classes, 2) for u in a for v in b]
    for mask in range(1 << len(cross)):
        es = [e for i, e in enumerate(cross) if mask >> i & 1]
        yield MCCInstance(Graph(kappa * n, es), classes)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def hampath(g):
    return HamPathInstance(g)


def cycle_rainbow(colours, kappa):
    n = len(colours)
    es = [(i, (i + 1) % n) for i in range(n)]
    g = Graph(n, es)
    return RainbowInstance(g, {(min(e), max(e)): c for e, c in zip(es, colours)}, kappa)
