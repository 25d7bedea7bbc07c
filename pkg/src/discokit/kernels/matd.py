"""Polynomial edge kernel for matching discovery via sunflowers over edge endpoints."""
from __future__ import annotations

from collections import deque

from ..discovery import DiscoveryInstance, Problem
from ..graph import EdgeId, Graph, edge_id
from ..sunflower import find_sunflower
from .report import KernelReport, check_kind, make_audit, restrict_edges


def _edge_tree(g: Graph, s: EdgeId, depth: int) -> tuple[dict, dict]:
    """Line-graph BFS from s up to `depth`, parents chosen lowest edge first."""
    dist, parent = {s: 0}, {s: None}
    q = deque([s])
    while q:
        e = q.popleft()
        if dist[e] >= depth:
            continue
        nbrs = sorted({edge_id(x, w) for x in e for w in g.adj[x]} - {e})
        for f in nbrs:
            if f not in dist:
                dist[f] = dist[e] + 1
                parent[f] = e
                q.append(f)
    return dist, parent


def trim_layer(layer: set, k: int) -> tuple[set, int]:
    """Shrink an edge layer to at most 8k^2 edges by deleting sunflower petals."""
    layer = set(layer)
    removed = 0
    while len(layer) > 8 * k * k:
        fam = sorted(layer)
        sf = find_sunflower([set(e) for e in fam], 2, 2 * k + 1)
        # guaranteed by the size threshold
        assert sf is not None
        victim = min(edge_id(*tuple(p)) for p in sf.petals)
        layer.discard(victim)
        removed += 1
    return layer, removed


def kernelize_matd(inst: DiscoveryInstance, k: int | None = None) -> KernelReport:
    k = check_kind(inst, Problem.MAT, k)
    g = inst.graph
    keep = set(inst.start.members)
    sizes = {}
    trimmed = 0
    for s in sorted(inst.start.members):
        dist, parent = _edge_tree(g, s, 3 * k)
        linked = {s}
        for i in range(1, 3 * k + 1):
            layer, gone = trim_layer({e for e, d in dist.items() if d == i}, k)
            trimmed += gone
            sizes[(s, i)] = len(layer)
            for e in layer:
                while e not in linked:
                    linked.add(e)
                    e = parent[e]
        keep |= linked
    # token-free components never meet a kept edge and vanish here
    kernel, vmap = restrict_edges(inst, keep)
    bound = k + 9 * k ** 3 * 8 * k * k
    details = {"max_layer": max(sizes.values(), default=0), "layer_cap": 8 * k * k, "trimmed": trimmed}
    return KernelReport(kernel, vmap, make_audit(kernel, bound, "k + 9k^3 * 8k^2", "edges", details=details))
