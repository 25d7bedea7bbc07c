"""Kernel output: the reduced instance, the relabelling map and a size audit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..discovery import DiscoveryInstance, Problem
from ..errors import InvalidArgument
from ..graph import Graph


@dataclass(frozen=True)
class KernelAudit:
    vertices: int
    edges: int
    budget: int
    bound: int | None  # claimed size bound, None when not audited
    bound_expr: str
    satisfied: bool | None
    note: str = ""
    measure: str = "vertices"  # what the bound counts
    details: Mapping[str, object] = field(default_factory=dict)


@dataclass(frozen=True)
class KernelReport:
    kernel: DiscoveryInstance
    vertex_map: Mapping[int, int]  # original id -> kernel id, partial
    audit: KernelAudit
    rejected: bool = False

    @property
    def size(self) -> int:
        return self.kernel.graph.n


def canonical_no(problem: Problem | str) -> DiscoveryInstance:
    """A single edge, no tokens and no budget: infeasible for every covering problem."""
    return DiscoveryInstance(Problem(problem), Graph(2, [(0, 1)]), [], 0)


def make_audit(kernel: DiscoveryInstance, bound: int | None, bound_expr: str,
               measure: str = "vertices", note: str = "", details=None) -> KernelAudit:
    g = kernel.graph
    value = g.n if measure == "vertices" else g.m
    ok = None if bound is None else value <= bound
    return KernelAudit(g.n, g.m, kernel.budget, bound, bound_expr, ok, note, measure, dict(details or {}))


def rejection(inst: DiscoveryInstance, reason: str) -> KernelReport:
    kernel = canonical_no(inst.problem)
    return KernelReport(kernel, {}, make_audit(kernel, None, "", note=f"rejected: {reason}"), True)


def restrict(inst: DiscoveryInstance, keep: Iterable[int], budget: int | None = None) -> tuple[DiscoveryInstance, dict[int, int]]:
    """Induced subinstance on `keep`; every start vertex must be kept."""
    keep = set(keep)
    if not set(inst.start.members) <= keep:
        raise InvalidArgument("a kernel must keep every start vertex")
    g, vmap = inst.graph.induced(keep)
    b = inst.budget if budget is None else budget
    terms = None if inst.terminals is None else tuple(vmap[t] for t in inst.terminals)
    kernel = DiscoveryInstance(inst.problem, g, [vmap[v] for v in inst.start.members], b, terms)
    return kernel, vmap


def restrict_edges(inst: DiscoveryInstance, keep_edges: Iterable) -> tuple[DiscoveryInstance, dict[int, int]]:
    """Edge-induced subinstance; every start edge must be kept."""
    keep_edges = set(keep_edges)
    if not set(inst.start.members) <= keep_edges:
        raise InvalidArgument("a kernel must keep every start edge")
    g, vmap = inst.graph.edge_induced(keep_edges)
    start = [(vmap[u], vmap[v]) for u, v in inst.start.members]
    return DiscoveryInstance(inst.problem, g, start, inst.budget), vmap


def check_kind(inst: DiscoveryInstance, problem: Problem, k: int | None) -> int:
    if inst.problem is not problem:
        raise InvalidArgument(f"this kernel takes {problem.value} instances, got {inst.problem.value}")
    if k is None:
        return inst.k
    if k != inst.k:
        raise InvalidArgument(f"k={k} does not match the {inst.k} start tokens")
    return k
