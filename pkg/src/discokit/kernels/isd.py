"""Independent-set discovery: distance truncation, sunflower petal removal and the kernel."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from ..discovery import DiscoveryInstance, Problem
from ..errors import InvalidArgument, ResourceLimit
from ..graph import Graph, bfs_distances, shortest_path
from ..sunflower import Sunflower, find_sunflower
from .report import KernelReport, check_kind, make_audit, restrict


def isd_distance_truncate(inst: DiscoveryInstance, k: int | None = None) -> KernelReport:
    """Drop every vertex farther than 3k from all tokens."""
    k = check_kind(inst, Problem.IS, k)
    near = bfs_distances(inst.graph, inst.start.members, limit=3 * k)
    kernel, vmap = restrict(inst, set(near) | set(inst.start.members))
    return KernelReport(kernel, vmap, make_audit(kernel, None, "", note="distance truncation"))


def _petal_victim(g: Graph, sf: Sunflower, owner: dict) -> int:
    """Pick the petal vertex to delete.

    A petal vertex whose neighbours all lie in the core can be swapped for
    any other petal vertex on every walk, so those go first.
    """
    verts = sorted(owner[p] for p in sf.petals)
    quiet = [v for v in verts if g.adj[v] <= sf.core]
    return (quiet or verts)[0]


def _layer_sunflower(g: Graph, layer, k: int):
    owner = {}
    for v in sorted(layer):
        owner.setdefault(frozenset(g.adj[v] | {v}), v)
    if len(owner) < k + 1:
        return None, owner
    d = max(len(x) for x in owner)
    return find_sunflower(list(owner), d, k + 1), owner


def isd_remove_petal(inst: DiscoveryInstance, s: int, i: int) -> KernelReport | None:
    """Delete one vertex of V(s, i) whose closed neighbourhood is a sunflower petal.

    Returns None when the layer holds no (k+1)-petal sunflower.
    """
    if inst.problem is not Problem.IS:
        raise InvalidArgument("petal removal applies to IS instances")
    if s not in inst.start.members:
        raise InvalidArgument(f"{s} carries no token")
    g, k = inst.graph, inst.k
    dist = bfs_distances(g, [s], limit=i)
    layer = {v for v, d in dist.items() if d == i} - set(inst.start.members)
    sf, owner = _layer_sunflower(g, layer, k)
    if sf is None:
        return None
    victim = _petal_victim(g, sf, owner)
    kernel, vmap = restrict(inst, set(range(g.n)) - {victim})
    return KernelReport(kernel, vmap, make_audit(kernel, None, "", note=f"removed petal vertex {victim}"))


def _r_independent_subset(g: Graph, cand: list[int], r: int, m: int, budget: list[int]):
    """Exact search for m candidates pairwise farther than r apart."""
    close = {v: set(bfs_distances(g, [v], limit=r)) for v in cand}
    greedy = []
    for v in cand:
        if all(v not in close[u] for u in greedy):
            greedy.append(v)
    if len(greedy) >= m:
        return greedy

    def rec(pool, chosen):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceLimit("cap-search", 0, "quasi-wideness search exceeded its budget")
        if len(chosen) >= m:
            return chosen
        if len(chosen) + len(pool) < m:
            return None
        v, rest = pool[0], pool[1:]
        found = rec([u for u in rest if u not in close[v]], chosen + [v])
        return found if found is not None else rec(rest, chosen)

    return rec(cand, [])


def quasi_wide_witness(g: Graph, a_set, r: int, m: int, x_cap: int, cap: int = 1_000_000):
    """Find X (|X| <= x_cap) and B in a_set - X, |B| >= m, B r-independent in G - X."""
    if r < 1 or x_cap < 0:
        raise InvalidArgument("need r >= 1 and x_cap >= 0")
    a_set = sorted(set(a_set))
    budget = [cap]
    for size in range(x_cap + 1):
        for xs in combinations(range(g.n), size):
            X = set(xs)
            rest, vmap = g.induced(set(range(g.n)) - X)
            back = {w: v for v, w in vmap.items()}
            cand = [vmap[v] for v in a_set if v not in X]
            if len(cand) < m:
                continue
            found = _r_independent_subset(rest, cand, r, m, budget)
            if found is not None:
                return X, {back[w] for w in found}
    return None


@dataclass(frozen=True)
class IsdCaps:
    """Search limits for the IS kernel; n2 and x2 are the class constants (optional)."""

    x_cap: int = 1
    n2: Callable[[int], int] | None = None
    x2: int | None = None
    search_cap: int = 1_000_000
    max_removals: int = 100_000


def kernelize_isd(inst: DiscoveryInstance, k: int | None = None, caps: IsdCaps | None = None) -> KernelReport:
    k = check_kind(inst, Problem.IS, k)
    caps = caps or IsdCaps()
    first = isd_distance_truncate(inst, k)
    t = first.kernel
    g = t.graph
    starts = sorted(t.start.members)
    x = caps.x2 if caps.x2 is not None else caps.x_cap
    target = 2 ** x * (k + 1)
    threshold = caps.n2(target) if caps.n2 is not None else None
    layers = {}
    removals, saturated = 0, False
    for s in starts:
        dist = bfs_distances(g, [s], limit=3 * k)
        for i in range(1, 3 * k + 1):
            layer = {v for v, d in dist.items() if d == i}
            while not saturated:
                cand = layer - set(starts)
                if threshold is not None and len(layer) <= threshold:
                    break
                if removals >= caps.max_removals:
                    saturated = True
                    break
                try:
                    found = quasi_wide_witness(g, cand, 2, target, x, caps.search_cap)
                except ResourceLimit:
                    saturated = True
                    break
                if found is None:
                    break
                X, B = found
                classes = {}
                for v in sorted(B):
                    classes.setdefault(frozenset((g.adj[v] | {v}) & X), []).append(v)
                group = max(classes.values(), key=len)
                owner = {frozenset(g.adj[v] | {v}): v for v in group[:k + 1]}
                core = frozenset.intersection(*owner) if owner else frozenset()
                sf = Sunflower(core, tuple(owner))
                victim = _petal_victim(g, sf, owner)
                layer.discard(victim)
                removals += 1
            layers[(s, i)] = layer
    keep = set(starts)
    for (s, i), layer in layers.items():
        keep |= layer
        for v in layer:
            keep.update(shortest_path(g, s, v))
    kernel, vmap2 = restrict(t, keep)
    vmap = {v: vmap2[w] for v, w in first.vertex_map.items() if w in vmap2}
    if saturated:
        note, bound = "rules saturated, size bound unaudited", None
    elif threshold is None:
        note, bound = "class constants not supplied, size bound unaudited", None
    else:
        note, bound = "", k + 9 * k ** 3 * threshold
    details = {"removals": removals, "max_layer": max((len(v) for v in layers.values()), default=0)}
    return KernelReport(kernel, vmap, make_audit(kernel, bound, "k + 9k^3 N2(2^x2 (k+1))", note=note,
                                                 details=details))
