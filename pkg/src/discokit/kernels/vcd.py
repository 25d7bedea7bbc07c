"""Quadratic vertex kernel for vertex-cover discovery (high-degree rule)."""
from __future__ import annotations

from itertools import combinations

from ..discovery import DiscoveryInstance, Problem
from .report import KernelReport, check_kind, make_audit, rejection, restrict


def kernelize_vcd(inst: DiscoveryInstance, k: int | None = None) -> KernelReport:
    k = check_kind(inst, Problem.VC, k)
    g = inst.graph
    high = {v for v in range(g.n) if g.degree(v) > k}
    h = len(high)
    low_edges = [(u, v) for u, v in g.edge_list if u not in high and v not in high]
    live = {x for e in low_edges for x in e}
    # every high-degree vertex sits in any cover of size k, which leaves
    # k - h cover vertices for the low part, each covering at most k edges
    if h > k:
        return rejection(inst, f"{h} vertices of degree > {k}")
    if len(low_edges) > k * k or len(live) > 2 * k * k:
        return rejection(inst, "low-degree part exceeds k^2 edges or 2k^2 vertices")
    if len(low_edges) > k * (k - h) or len(live) > 2 * k * (k - h):
        return rejection(inst, "low-degree part too large for the cover vertices left")

    def lonely(x):
        return x not in high and x not in live

    keep = set(live) | set(inst.start.members) | high
    for u, v in combinations(sorted(high), 2):
        common = g.adj[u] & g.adj[v]
        if common and all(lonely(x) for x in common):
            keep.add(min(common))
    for u in sorted(high):
        missing = k + 1 - len(g.adj[u] & keep)
        if missing > 0:
            spare = sorted(x for x in g.adj[u] if lonely(x) and x not in keep)
            keep.update(spare[:missing])
    kernel, vmap = restrict(inst, keep)
    bound = 3 * k * k + 2 * k
    return KernelReport(kernel, vmap, make_audit(kernel, bound, "3k^2 + 2k",
                                                 details={"high": h, "low_edges": len(low_edges)}))
