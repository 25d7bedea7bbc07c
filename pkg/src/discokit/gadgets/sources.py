"""Source problems consumed by the hardness constructions, with exhaustive oracles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import InvalidArgument, ResourceLimit
from ..graph import EdgeId, Graph, edge_id
from ..pathdecomp import PathDecomposition, validate

DEFAULT_ORIENTATION_CAP = 24


@dataclass(frozen=True)
class MMOInstance:
    """Weighted graph plus a path decomposition and an out-weight threshold r."""

    h: Graph
    pd: PathDecomposition
    sigma: Mapping[EdgeId, int]
    r: int

    def __post_init__(self):
        sig = {edge_id(*e): int(w) for e, w in dict(self.sigma).items()}
        if set(sig) != set(self.h.edges):
            raise InvalidArgument("sigma must assign a weight to every edge and nothing else")
        if any(w < 1 for w in sig.values()):
            raise InvalidArgument("edge weights must be positive")
        if self.r < 1:
            raise InvalidArgument("threshold r must be positive")
        check = validate(self.pd, self.h)
        if not check:
            raise InvalidArgument(f"decomposition invalid for H: {check.message}")
        object.__setattr__(self, "sigma", dict(sorted(sig.items())))

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def m(self) -> int:
        return self.h.m

    @property
    def total_weight(self) -> int:
        return sum(self.sigma.values())

    def edge_index(self) -> dict[EdgeId, int]:
        return {e: i for i, e in enumerate(self.h.edge_list)}


@dataclass(frozen=True)
class Orientation:
    """Per-edge (tail, head) choice; the tail pays the edge's weight."""

    direction: Mapping[EdgeId, tuple[int, int]]

    def __post_init__(self):
        d = {}
        for e, (a, b) in dict(self.direction).items():
            c = edge_id(*e)
            if edge_id(a, b) != c:
                raise InvalidArgument(f"direction {a}->{b} is not an orientation of {c}")
            d[c] = (a, b)
        object.__setattr__(self, "direction", d)

    def tail(self, e: EdgeId) -> int:
        return self.direction[edge_id(*e)][0]

    def head(self, e: EdgeId) -> int:
        return self.direction[edge_id(*e)][1]

    @classmethod
    def from_bits(cls, edges: Iterable[EdgeId], bits: Iterable[int]) -> "Orientation":
        """Bit 0 orients u->v for the canonical pair (u, v), bit 1 orients v->u."""
        return cls({e: (e if b == 0 else (e[1], e[0])) for e, b in zip(edges, bits)})


def out_weights(inst: MMOInstance, lam: Orientation) -> list[int]:
    load = [0] * inst.n
    for e, w in inst.sigma.items():
        load[lam.tail(e)] += w
    return load


def mmo_feasible(inst: MMOInstance, lam: Orientation) -> bool:
    if set(lam.direction) != set(inst.sigma):
        return False
    return max(out_weights(inst, lam), default=0) <= inst.r


def solve_mmo(inst: MMOInstance, cap: int = DEFAULT_ORIENTATION_CAP) -> Orientation | None:
    """Lexicographically least feasible orientation (bit 0 before bit 1 per edge), or None."""
    if inst.m > cap:
        raise ResourceLimit("cap-orientations", cap, f"{inst.m} edges exceed the orientation cap {cap}")
    edges = inst.h.edge_list
    load = [0] * inst.n
    bits: list[int] = []

    def rec(i):
        if i == len(edges):
            return True
        e = edges[i]
        w = inst.sigma[e]
        for b in (0, 1):
            t = e[b]
            if load[t] + w <= inst.r:
                load[t] += w
                bits.append(b)
                if rec(i + 1):
                    return True
                bits.pop()
                load[t] -= w
        return False

    if not rec(0):
        return None
    return Orientation.from_bits(edges, bits)


@dataclass(frozen=True)
class MCCInstance:
    """Multicolored clique: vertex classes are independent sets partitioning V."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cls = tuple(tuple(sorted(c)) for c in self.classes)
        flat = [v for c in cls for v in c]
        if sorted(flat) != list(range(self.graph.n)):
            raise InvalidArgument("colour classes must partition the vertex set")
        colour = {v: i for i, c in enumerate(cls) for v in c}
        for u, v in self.graph.edge_list:
            if colour[u] == colour[v]:
                raise InvalidArgument(f"edge {u}-{v} lies inside colour class {colour[u]}")
        object.__setattr__(self, "classes", cls)

    @property
    def kappa(self) -> int:
        return len(self.classes)

    def colour_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def padded(self) -> "MCCInstance":
        """Add isolated vertices so every class has the size of the largest one."""
        n = max((len(c) for c in self.classes), default=0)
        nxt = self.graph.n
        classes = []
        for c in self.classes:
            extra = list(range(nxt, nxt + n - len(c)))
            nxt += len(extra)
            classes.append(tuple(c) + tuple(extra))
        return MCCInstance(Graph(nxt, self.graph.edges), tuple(classes))


def solve_mcc(inst: MCCInstance, cap: int = 10**7) -> tuple[int, ...] | None:
    """A clique with one vertex per class (lexicographically least), or None."""
    g = inst.graph
    count = 0

    def rec(i, chosen):
        nonlocal count
        if i == inst.kappa:
            return tuple(chosen)
        for v in inst.classes[i]:
            count += 1
            if count > cap:
                raise ResourceLimit("cap-subsets", cap)
            if all(g.has_edge(v, u) for u in chosen):
                found = rec(i + 1, chosen + [v])
                if found:
                    return found
        return None

    return rec(0, [])


@dataclass(frozen=True)
class HamPathInstance:
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n


def is_hamiltonian_path(g: Graph, path) -> bool:
    return (sorted(path) == list(range(g.n))
            and all(g.has_edge(a, b) for a, b in zip(path, path[1:])))


def solve_hampath(inst: HamPathInstance, cap: int = 10**7) -> tuple[int, ...] | None:
    """Lexicographically least Hamiltonian path, or None."""
    g = inst.graph
    if g.n == 0:
        return ()
    count = 0

    def rec(path, used):
        nonlocal count
        if len(path) == g.n:
            return tuple(path)
        for w in sorted(g.adj[path[-1]]):
            if w not in used:
                count += 1
                if count > cap:
                    raise ResourceLimit("cap-subsets", cap)
                used.add(w)
                found = rec(path + [w], used)
                if found:
                    return found
                used.discard(w)
        return None

    for s in range(g.n):
        found = rec([s], {s})
        if found:
            return found
    return None


@dataclass(frozen=True)
class RainbowInstance:
    """2-regular graph with a proper edge colouring using each colour exactly twice."""

    graph: Graph
    colour: Mapping[EdgeId, int]
    kappa: int

    def __post_init__(self):
        col = {edge_id(*e): c for e, c in dict(self.colour).items()}
        g = self.graph
        if set(col) != set(g.edges):
            raise InvalidArgument("every edge needs exactly one colour")
        if any(g.degree(v) != 2 for v in range(g.n)):
            raise InvalidArgument("rainbow source graphs must be 2-regular")
        for v in range(g.n):
            cs = [col[edge_id(v, w)] for w in g.adj[v]]
            if len(set(cs)) != len(cs):
                raise InvalidArgument(f"colouring is not proper at vertex {v}")
        counts: dict[int, int] = {}
        for c in col.values():
            counts[c] = counts.get(c, 0) + 1
        if any(k != 2 for k in counts.values()):
            raise InvalidArgument("each colour must be used exactly twice")
        if self.kappa < 1:
            raise InvalidArgument("kappa must be positive")
        object.__setattr__(self, "colour", dict(sorted(col.items())))

    @property
    def m(self) -> int:
        return self.graph.m


def is_rainbow_matching(inst: RainbowInstance, edges) -> bool:
    es = [edge_id(*e) for e in edges]
    if len(set(es)) != len(es) or any(e not in inst.colour for e in es):
        return False
    ends = [x for e in es for x in e]
    cols = [inst.colour[e] for e in es]
    return len(set(ends)) == len(ends) and len(set(cols)) == len(cols) and len(es) >= inst.kappa


def solve_rainbow(inst: RainbowInstance, cap: int = 10**7) -> tuple[EdgeId, ...] | None:
    """Lexicographically least rainbow matching with exactly kappa edges, or None."""
    for count, combo in enumerate(itertools.combinations(inst.graph.edge_list, inst.kappa)):
        if count >= cap:
            raise ResourceLimit("cap-subsets", cap)
        if is_rainbow_matching(inst, combo):
            return combo
    return None
