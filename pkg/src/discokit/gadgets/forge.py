"""Incremental graph builder that keeps a path decomposition in step with every edit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..discovery import DiscoveryInstance
from ..errors import InvalidArgument
from ..graph import Graph, edge_id
from ..pathdecomp import PathDecomposition, validate, width


@dataclass(frozen=True)
class Provenance:
    source: str
    budget_formula: str
    params: Mapping[str, int]
    width_bound: int | None = None
    width_formula: str = ""
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class LabeledConstruction:
    graph: Graph
    pd: PathDecomposition
    names: Mapping[int, str]
    instance: DiscoveryInstance | None = None
    provenance: Provenance | None = None
    extra: Mapping[str, object] = field(default_factory=dict)

    def id(self, label: str) -> int:
        return self._lookup()[label]

    def ids(self, labels: Iterable[str]) -> list[int]:
        look = self._lookup()
        return [look[x] for x in labels]

    def has(self, label: str) -> bool:
        return label in self._lookup()

    def label(self, v: int) -> str:
        return self.names[v]

    def _lookup(self) -> dict[str, int]:
        cache = self.__dict__.get("_rev")
        if cache is None:
            cache = {lab: v for v, lab in self.names.items()}
            object.__setattr__(self, "_rev", cache)
        return cache

    @property
    def width(self) -> int:
        return width(self.pd)

    def with_instance(self, inst: DiscoveryInstance, prov: Provenance) -> "LabeledConstruction":
        return LabeledConstruction(self.graph, self.pd, self.names, inst, prov, self.extra)


class Forge:
    """Mutable staging area: labelled vertices, edges and an ordered bag list."""

    def __init__(self):
        self.names: list[str] = []
        self.ids: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()
        self.bags: list[set[int]] = []

    def __contains__(self, label: str) -> bool:
        return label in self.ids

    def __getitem__(self, label: str) -> int:
        return self.ids[label]

    def _id(self, x) -> int:
        return x if isinstance(x, int) else self.ids[x]

    def vertex(self, label: str) -> int:
        if label in self.ids:
            raise InvalidArgument(f"duplicate vertex label {label}")
        vid = len(self.names)
        self.names.append(label)
        self.ids[label] = vid
        return vid

    def vertices(self, labels: Iterable[str]) -> list[int]:
        return [self.vertex(x) for x in labels]

    def edge(self, a, b) -> None:
        self.edges.add(edge_id(self._id(a), self._id(b)))

    def remove_edge(self, a, b) -> None:
        self.edges.discard(edge_id(self._id(a), self._id(b)))

    def bag(self, members: Iterable) -> None:
        self.bags.append({self._id(x) for x in members})

    def add_to_all_bags(self, x) -> None:
        v = self._id(x)
        for b in self.bags:
            b.add(v)

    def subdivide(self, a, b, labels: list[str]) -> list[int]:
        """Replace edge ab by a path through fresh vertices, patching the bag list.

        The new bags go right after the smallest bag holding both ends, and
        carry only what that bag shares with its successor plus the two ends.
        """
        u, v = self._id(a), self._id(b)
        e = edge_id(u, v)
        if e not in self.edges:
            raise InvalidArgument(f"cannot subdivide missing edge {self.names[u]}-{self.names[v]}")
        self.edges.discard(e)
        cs = self.vertices(labels)
        path = [u] + cs + [v]
        for x, y in zip(path, path[1:]):
            self.edges.add(edge_id(x, y))
        if self.bags:
            hosts = [i for i, bg in enumerate(self.bags) if u in bg and v in bg]
            if not hosts:
                raise InvalidArgument("decomposition does not cover the subdivided edge")
            i = min(hosts, key=lambda j: (len(self.bags[j]), j))
            # vertices still live after bag i must stay; for the current last
            # bag that is unknown yet, so it is kept whole
            nxt = self.bags[i + 1] if i + 1 < len(self.bags) else self.bags[i]
            keep = (self.bags[i] & nxt) | {u, v}
            if len(cs) == 1:
                new = [keep | {cs[0]}]
            else:
                new = [keep | {cs[j], cs[j + 1]} for j in range(len(cs) - 1)]
            self.bags[i + 1:i + 1] = new
        return cs

    def freeze(self, check: bool = True) -> LabeledConstruction:
        g = Graph(len(self.names), self.edges)
        bags = [frozenset(b) for b in self.bags if b]
        pd = PathDecomposition(bags)
        if check:
            verdict = validate(pd, g)
            if not verdict:
                raise AssertionError(f"builder produced an invalid decomposition: {verdict.message}")
        return LabeledConstruction(g, pd, dict(enumerate(self.names)))

    @classmethod
    def thaw(cls, lc: LabeledConstruction) -> "Forge":
        f = cls()
        for v in range(lc.graph.n):
            f.vertex(lc.names[v])
        f.edges = set(lc.graph.edges)
        f.bags = [set(b) for b in lc.pd.bags]
        return f
