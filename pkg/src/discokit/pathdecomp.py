"""Path decompositions: validity, width, nice form and acyclicity audits."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidArgument
from .graph import Graph
from .verdict import Verdict


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset, ...]

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in bags))

    def __len__(self) -> int:
        return len(self.bags)

    def __iter__(self):
        return iter(self.bags)

    @property
    def width(self) -> int:
        return width(self)


@dataclass(frozen=True)
class FvsCertificate:
    deleted: frozenset

    def __init__(self, deleted: Iterable[int]):
        object.__setattr__(self, "deleted", frozenset(deleted))

    def __len__(self) -> int:
        return len(self.deleted)


def width(pd: PathDecomposition) -> int:
    if not pd.bags:
        raise InvalidArgument("width of an empty decomposition is undefined")
    return max(len(b) for b in pd.bags) - 1


def validate(pd: PathDecomposition, g: Graph) -> Verdict:
    """Check vertex coverage, edge coverage and contiguity, in that order.

    Bags mentioning ids outside the graph fail the coverage condition.
    """
    seen = set()
    for b in pd.bags:
        seen |= b
    stray = sorted(v for v in seen if not (0 <= v < g.n))
    if stray:
        return Verdict.failed("i", stray[0], f"bag vertex {stray[0]} is not in the graph")
    missing = [v for v in range(g.n) if v not in seen]
    if missing:
        return Verdict.failed("i", missing[0], f"vertex {missing[0]} is in no bag")
    for u, v in g.edge_list:
        if not any(u in b and v in b for b in pd.bags):
            return Verdict.failed("ii", (u, v), f"edge {u}-{v} uncovered")
    first, last, count = {}, {}, {}
    for i, b in enumerate(pd.bags):
        for v in b:
            first.setdefault(v, i)
            last[v] = i
            count[v] = count.get(v, 0) + 1
    for v in sorted(first):
        if last[v] - first[v] + 1 != count[v]:
            gap = next(i for i in range(first[v], last[v] + 1) if v not in pd.bags[i])
            return Verdict.failed("iii", (v, gap), f"vertex {v} leaves bag {gap} and returns")
    return Verdict.passed()


def make_nice(pd: PathDecomposition, g: Graph) -> PathDecomposition:
    """Expand to single introduce/forget steps, framed by empty bags.

    Between consecutive bags, vertices are forgotten first and then introduced,
    each group in ascending id order.
    """
    if not pd.bags or not validate(pd, g):
        raise InvalidArgument("make_nice needs a valid nonempty decomposition")
    out = [frozenset()]
    cur = set()
    for b in list(pd.bags) + [frozenset()]:
        for v in sorted(cur - b):
            cur.discard(v)
            out.append(frozenset(cur))
        for v in sorted(b - cur):
            cur.add(v)
            out.append(frozenset(cur))
    return PathDecomposition(out)


def is_nice(pd: PathDecomposition) -> bool:
    bags = pd.bags
    if not bags or bags[0] or bags[-1]:
        return False
    return all(len(a ^ b) == 1 for a, b in zip(bags, bags[1:]))


def find_cycle(g: Graph, removed: Iterable[int] = ()) -> list[int] | None:
    """A cycle of g minus `removed` as a closed vertex walk, or None."""
    gone = set(removed)
    parent: dict[int, int] = {}
    for root in range(g.n):
        if root in gone or root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            u = stack.pop()
            for w in sorted(g.adj[u]):
                if w in gone or w == parent[u]:
                    continue
                if w in parent:
                    # w already reached: the two tree paths close a cycle
                    return _tree_cycle(parent, u, w)
                parent[w] = u
                stack.append(w)
    return None


def _tree_cycle(parent, u, w):
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    pos = {v: i for i, v in enumerate(anc_u)}
    path_w = [w]
    while path_w[-1] not in pos:
        path_w.append(parent[path_w[-1]])
    meet = path_w[-1]
    cyc = anc_u[: pos[meet] + 1] + list(reversed(path_w[:-1]))
    return cyc + [cyc[0]]


def verify_fvs(g: Graph, cert: FvsCertificate) -> Verdict:
    bad = [v for v in cert.deleted if not (0 <= v < g.n)]
    if bad:
        raise InvalidArgument(f"certificate vertex {bad[0]} is not in the graph")
    cyc = find_cycle(g, cert.deleted)
    if cyc is None:
        return Verdict.passed()
    return Verdict.failed("cycle", cyc, "cycle " + "-".join(map(str, cyc)))


def from_vertex_order(g: Graph, order: Iterable[int]) -> PathDecomposition:
    """Decomposition induced by a linear vertex order (its vertex-separation bags)."""
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise InvalidArgument("order must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    reach = [max([pos[v]] + [pos[w] for w in g.adj[v]]) for v in range(g.n)]
    bags, live = [], set()
    for i, v in enumerate(order):
        live.add(v)
        bags.append(frozenset(live))
        live = {u for u in live if reach[u] > i}
    return PathDecomposition(bags)
