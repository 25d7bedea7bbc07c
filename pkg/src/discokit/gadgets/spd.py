"""Or-composition of Hamiltonian Path instances into shortest-path discovery."""
from __future__ import annotations

from ..discovery import DiscoveryInstance, DiscoverySequence, Problem
from ..errors import PreconditionError
from ..graph import bfs_distances
from ..pathdecomp import from_vertex_order
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import budget, budget_formula
from .sources import HamPathInstance, is_hamiltonian_path
from .witness import Slides


def _cell(j, x, y): return f"H{j}/{x},{y}"
def _link(j, x, y, k): return f"H{j}/link:{x},{y}:{k}"


def bfs_order(g) -> list[int]:
    """Vertices ordered by distance from vertex 0, unreachable ones last."""
    dist = bfs_distances(g, [0]) if g.n else {}
    return sorted(range(g.n), key=lambda v: (dist.get(v, g.n + 1), v))


def compose_spd(instances) -> LabeledConstruction:
    """Layer grid per instance; token x reaches row x of any grid after exactly n slides."""
    instances = list(instances)
    if not instances:
        raise PreconditionError("need at least one instance")
    n = instances[0].n
    if n < 1 or any(h.n != n for h in instances):
        raise PreconditionError("all instances must share the same positive vertex count")
    f = Forge()
    f.vertex("a")
    f.vertex("b")
    for x in range(1, n + 1):
        f.vertex(f"tok:{x}")
    for j, h in enumerate(instances, 1):
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                f.vertex(_cell(j, x, y))
        for x in range(1, n):
            for u, v in h.graph.edge_list:
                f.edge(_cell(j, x, u + 1), _cell(j, x + 1, v + 1))
                f.edge(_cell(j, x, v + 1), _cell(j, x + 1, u + 1))
        for y in range(1, n + 1):
            f.edge("a", _cell(j, 1, y))
            f.edge(_cell(j, n, y), "b")
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                chain = [f"tok:{x}"] + [_link(j, x, y, k) for k in range(1, n)] + [_cell(j, x, y)]
                for lab in chain[1:-1]:
                    f.vertex(lab)
                for p, q in zip(chain, chain[1:]):
                    f.edge(p, q)
    lc = f.freeze(check=False)
    pd = from_vertex_order(lc.graph, bfs_order(lc.graph))
    params = {"n": n, "t": len(instances)}
    start = [f["a"], f["b"]] + [f[f"tok:{x}"] for x in range(1, n + 1)]
    inst = DiscoveryInstance(Problem.SP, lc.graph, start, budget("spd-comp", params),
                             (f["a"], f["b"]))
    prov = Provenance("spd-comp", budget_formula("spd-comp"), params, None, "", ())
    return LabeledConstruction(lc.graph, pd, lc.names, inst, prov,
                               {"kind": "spd-comp", "sources": tuple(instances)})


def witness_from_hampath(construction: LabeledConstruction, source_witness) -> DiscoverySequence:
    """source_witness is (j, path) with j the 1-based instance index, or a bare path for j = 1."""
    if construction.extra.get("kind") != "spd-comp":
        raise PreconditionError("construction is not a shortest-path composition")
    if isinstance(source_witness, tuple) and len(source_witness) == 2 and isinstance(source_witness[0], int) \
            and not isinstance(source_witness[1], int):
        j, path = source_witness
    else:
        j, path = 1, source_witness
    sources = construction.extra["sources"]
    if not 1 <= j <= len(sources) or not is_hamiltonian_path(sources[j - 1].graph, path):
        raise PreconditionError("witness is not a Hamiltonian path of the selected instance")
    sl = Slides(construction)
    n = sources[j - 1].n
    for x, y in enumerate(path, 1):
        sl.move([f"tok:{x}"] + [_link(j, x, y + 1, k) for k in range(1, n)] + [_cell(j, x, y + 1)])
    return sl.sequence()
