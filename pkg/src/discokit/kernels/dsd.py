"""Dominating-set discovery: domination cores and the projection-class kernel."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..discovery import DiscoveryInstance, Problem
from ..errors import InvalidArgument, ResourceLimit
from ..graph import Graph, bfs_distances, shortest_path
from .report import KernelReport, check_kind, make_audit, rejection, restrict


def _small_sets(g: Graph, k: int, cap: int):
    count = 0
    for size in range(k + 1):
        for d in combinations(range(g.n), size):
            count += 1
            if count > cap:
                raise ResourceLimit("cap-subsets", cap)
            yield d


def _dominated(g: Graph, d) -> set[int]:
    out = set(d)
    for v in d:
        out |= g.adj[v]
    return out


@dataclass(frozen=True)
class DominationCore:
    """Vertex set C such that every set of at most k vertices dominating C dominates G."""

    graph: Graph
    core: frozenset
    k: int

    def __post_init__(self):
        object.__setattr__(self, "core", frozenset(self.core))
        every = set(range(self.graph.n))
        for d in _small_sets(self.graph, self.k, 10**7):
            dom = _dominated(self.graph, d)
            if self.core <= dom and dom != every:
                raise InvalidArgument(f"{sorted(d)} dominates the core but not the graph")


def compute_domination_core(g: Graph, k: int, cap: int = 1_000_000) -> DominationCore | None:
    """Shrink C = V(G) one vertex at a time; None when no k vertices dominate G."""
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    doms = [_dominated(g, d) for d in _small_sets(g, k, cap)]
    every = set(range(g.n))
    if not any(d == every for d in doms):
        return None
    core = set(every)
    for v in range(g.n):
        rest = core - {v}
        if all(v in d for d in doms if rest <= d):
            core = rest
    return DominationCore(g, core, k)


def kernelize_dsd(inst: DiscoveryInstance, k: int | None = None, cap: int = 1_000_000) -> KernelReport:
    k = check_kind(inst, Problem.DS, k)
    g = inst.graph
    dc = compute_domination_core(g, k, cap)
    if dc is None:
        return rejection(inst, f"no {k} vertices dominate the graph")
    core = dc.core
    budget = min(inst.budget, 3 * k * k + 2 * k)
    classes: dict[frozenset, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(frozenset((g.adj[v] | {v}) & core), []).append(v)
    keep = set(core) | set(inst.start.members)
    for t in sorted(inst.start.members):
        dist = bfs_distances(g, [t], limit=budget)
        for members in classes.values():
            reach = [(dist[v], v) for v in members if v in dist]
            if reach:
                keep.update(shortest_path(g, t, min(reach)[1]))
    kernel, vmap = restrict(inst, keep, budget)
    bound = len(core) + k + k * len(classes) * budget
    details = {"core": len(core), "classes": len(classes), "budget_clamped": budget < inst.budget}
    return KernelReport(kernel, vmap, make_audit(kernel, bound, "|C| + k + k * classes * b",
                                                 details=details))
