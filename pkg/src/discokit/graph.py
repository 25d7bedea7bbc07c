"""Immutable undirected simple graphs over dense integer vertex ids."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import InvalidArgument

EdgeId = tuple[int, int]


def edge_id(u: int, v: int) -> EdgeId:
    """Canonical (smaller, larger) pair for the edge uv."""
    if u == v:
        raise InvalidArgument(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise InvalidArgument("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            canon.add(edge_id(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "_edge_list", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_list(self) -> tuple[EdgeId, ...]:
        """Edges in ascending canonical order; indices into this tuple are stable."""
        return self._edge_list

    @property
    def adj(self) -> tuple[frozenset, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge_id(u, v) in self.edges

    def induced(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced by `keep`, relabelled in ascending id order."""
        order = sorted(set(keep))
        vmap = {v: i for i, v in enumerate(order)}
        es = [(vmap[u], vmap[v]) for u, v in self._edge_list if u in vmap and v in vmap]
        return Graph(len(order), es), vmap

    def edge_induced(self, keep: Iterable[EdgeId]) -> tuple["Graph", dict[int, int]]:
        """Subgraph formed by the given edges and their endpoints."""
        ks = sorted({edge_id(*e) for e in keep})
        order = sorted({x for e in ks for x in e})
        vmap = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(vmap[u], vmap[v]) for u, v in ks]), vmap

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise InvalidArgument(f"vertex {v!r} is not in 0..{g.n - 1}")


def _check_edge(g: Graph, e) -> EdgeId:
    try:
        c = edge_id(*e)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"{e!r} is not an edge") from exc
    if c not in g.edges:
        raise InvalidArgument(f"edge {c[0]}-{c[1]} is not in the graph")
    return c


def neighbors(g: Graph, v: int, closed: bool = False) -> set[int]:
    _check_vertex(g, v)
    out = set(g.adj[v])
    if closed:
        out.add(v)
    return out


def closed_neighborhood(g: Graph, vs: Iterable[int]) -> set[int]:
    out = set()
    for v in vs:
        out.add(v)
        out |= g.adj[v]
    return out


def bfs_distances(g: Graph, sources: Iterable[int], limit: int | None = None) -> dict[int, int]:
    """Hop distance from the nearest source to every reachable vertex."""
    dist = {}
    q = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            q.append(s)
    while q:
        u = q.popleft()
        d = dist[u]
        if limit is not None and d >= limit:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = d + 1
                q.append(w)
    return dist


def vertex_distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest path length, or None when v is unreachable from u."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return bfs_distances(g, [u]).get(v)


def incident_edges(g: Graph, v: int) -> list[EdgeId]:
    return sorted(edge_id(v, w) for w in g.adj[v])


def edge_bfs(g: Graph, sources: Iterable[EdgeId], limit: int | None = None) -> dict[EdgeId, int]:
    """Line-graph distances from the nearest source edge."""
    dist = {}
    q = deque()
    for e in sources:
        e = edge_id(*e)
        if e not in dist:
            dist[e] = 0
            q.append(e)
    while q:
        e = q.popleft()
        d = dist[e]
        if limit is not None and d >= limit:
            continue
        for x in e:
            for w in g.adj[x]:
                f = edge_id(x, w)
                if f not in dist:
                    dist[f] = d + 1
                    q.append(f)
    return dist


def edge_distance(g: Graph, e: EdgeId, f: EdgeId) -> int | None:
    """Distance between two edges in the line graph; d(e, e) = 0."""
    e = _check_edge(g, e)
    f = _check_edge(g, f)
    return edge_bfs(g, [e]).get(f)


def distance_layer(g: Graph, s: Union[int, EdgeId], i: int) -> set:
    """Vertices (or edges, when `s` is an edge) at distance exactly i from s."""
    if i < 0:
        raise InvalidArgument("layer index must be nonnegative")
    if isinstance(s, tuple):
        s = _check_edge(g, s)
        dist = edge_bfs(g, [s], limit=i)
    else:
        _check_vertex(g, s)
        dist = bfs_distances(g, [s], limit=i)
    return {x for x, d in dist.items() if d == i}


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = sorted(bfs_distances(g, [s]))
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def shortest_path(g: Graph, u: int, v: int) -> list[int] | None:
    """Lexicographically least shortest u-v path as a vertex list."""
    dist_v = bfs_distances(g, [v])
    if u not in dist_v:
        return None
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(min(w for w in g.adj[x] if dist_v.get(w) == dist_v[x] - 1))
    return path
