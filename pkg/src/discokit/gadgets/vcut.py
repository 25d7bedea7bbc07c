"""Or-composition of Rainbow Matching instances into vertex-cut discovery."""
from __future__ import annotations

from math import ceil

from ..discovery import DiscoveryInstance, DiscoverySequence, Problem
from ..errors import PreconditionError
from ..graph import edge_id
from ..pathdecomp import from_vertex_order
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import budget, budget_formula
from .sources import RainbowInstance, is_rainbow_matching
from .spd import bfs_order
from .witness import Slides


def _ev(r, p, h, side): return f"G{r}/v:{p}:{h}:{side}"
def _u(i, j): return f"u:{i}:{j}"
def _w(i, j): return f"w:{i}:{j}"
def _node(d, idx): return f"T:{d}:{idx}"


def _chain(f: Forge, a: str, b: str, length: int) -> None:
    """Join a and b by a path with `length` edges."""
    labels = [a] + [f"({a})~({b})#{k}" for k in range(1, length)] + [b]
    for lab in labels[1:-1]:
        f.vertex(lab)
    for p, q in zip(labels, labels[1:]):
        f.edge(p, q)


def _depth(t: int) -> int:
    return (t - 1).bit_length()


def compose_vcutd(instances) -> LabeledConstruction:
    instances = list(instances)
    if not instances:
        raise PreconditionError("need at least one instance")
    first = instances[0]
    m, kappa, nv = first.m, first.kappa, first.graph.n
    if any((h.m, h.kappa, h.graph.n) != (m, kappa, nv) for h in instances):
        raise PreconditionError("instances must share vertex count, edge count and kappa")
    if kappa < 2:
        raise PreconditionError("the vertex-cut composition needs kappa >= 2")
    s = _depth(len(instances))
    t = 1 << s
    # duplicate the last instance until the count is a power of two
    padded = instances + [instances[-1]] * (t - len(instances))
    L = m ** 3 + s
    f = Forge()
    f.vertex("b")
    for r, h in enumerate(padded, 1):
        es = h.graph.edge_list
        col = [h.colour[e] for e in es]
        f.vertex(f"G{r}/s")
        f.vertex(f"G{r}/t")
        for p in range(1, kappa):
            f.vertex(f"G{r}/s:{p}")
            f.vertex(f"G{r}/t:{p}")
            for hh in range(1, m + 1):
                f.vertex(_ev(r, p, hh, 1))
                f.vertex(_ev(r, p, hh, 2))
        for p in range(1, kappa):
            _chain(f, f"G{r}/s", f"G{r}/s:{p}", L)
            _chain(f, f"G{r}/t", f"G{r}/t:{p}", L)
            for hh in range(1, m + 1):
                _chain(f, f"G{r}/s:{p}", _ev(r, p, hh, 1), L)
                _chain(f, f"G{r}/t:{p}", _ev(r, p, hh, 2), L)
        for p in range(1, kappa):
            for q in range(p, kappa):
                for a in range(m):
                    for b in range(m):
                        if col[a] == col[b] or set(es[a]) & set(es[b]):
                            _chain(f, _ev(r, p, a + 1, 1), _ev(r, q, b + 1, 2), L)
            if p + 1 < kappa:
                for a in range(m):
                    for b in range(m):
                        if a != b:
                            _chain(f, _ev(r, p, a + 1, 2), _ev(r, p + 1, b + 1, 1), L)
        _chain(f, "b", f"G{r}/t", L)
    # binary tree over the instance sources, root "a"; leaves are the G{r}/s vertices
    def node(d, idx):
        return f"G{idx + 1}/s" if d == s else ("a" if d == 0 else _node(d, idx))
    if s == 0:
        root = node(0, 0)
    else:
        f.vertex("a")
        root = "a"
        for d in range(1, s):
            for idx in range(1 << d):
                f.vertex(_node(d, idx))
        for d in range(1, s + 1):
            f.vertex(f"v:{d}")
            for idx in range(1 << d):
                _chain(f, node(d - 1, idx >> 1), node(d, idx), L)
                f.edge(f"v:{d}", node(d, idx))
    for i in range(1, 2 * (kappa - 1) + 1):
        p, side = ceil(i / 2), 1 if i % 2 else 2
        for j in range(1, m):
            f.vertex(_u(i, j))
            f.vertex(_w(i, j))
            f.edge(_u(i, j), _w(i, j))
            for r in range(1, t + 1):
                for hh in range(1, m + 1):
                    f.edge(_u(i, j), _ev(r, p, hh, side))
                _chain(f, f"G{r}/s", _u(i, j), L)
                _chain(f, f"G{r}/t", _u(i, j), L)
    lc = f.freeze(check=False)
    pd = from_vertex_order(lc.graph, bfs_order(lc.graph))
    params = {"m": m, "kappa": kappa, "t": t}
    start = [f[x] for x in lc.names.values() if x.startswith(("u:", "w:")) or (x.startswith("v:") and s)]
    inst = DiscoveryInstance(Problem.VCUT, lc.graph, start, budget("vcut-comp", params),
                             (f[root], f["b"]))
    notes = (f"padded from {len(instances)} to {t} instances",) if t != len(instances) else ()
    prov = Provenance("vcut-comp", budget_formula("vcut-comp"), params, None, "", notes)
    return LabeledConstruction(lc.graph, pd, lc.names, inst, prov,
                               {"kind": "vcut-comp", "sources": tuple(padded), "depth": s})


def witness_from_rainbow(construction: LabeledConstruction, source_witness) -> DiscoverySequence:
    """source_witness is (r, matching) with r 1-based, or a bare matching for r = 1.

    The tree part blocks the sibling of each ancestor of the chosen leaf.
    With more than two instances the emptied depth vertices reconnect other
    branches, so the result only separates the terminals for t <= 2.
    """
    if construction.extra.get("kind") != "vcut-comp":
        raise PreconditionError("construction is not a vertex-cut composition")
    if isinstance(source_witness, tuple) and len(source_witness) == 2 and isinstance(source_witness[0], int):
        r, matching = source_witness
    else:
        r, matching = 1, source_witness
    sources = construction.extra["sources"]
    if not 1 <= r <= len(sources) or not is_rainbow_matching(sources[r - 1], matching):
        raise PreconditionError("witness is not a rainbow matching of the selected instance")
    h = sources[r - 1]
    es = h.graph.edge_list
    kappa, m = h.kappa, h.m
    picked = sorted(es.index(edge_id(*e)) + 1 for e in matching)[:kappa]
    sl = Slides(construction)
    for i in range(1, 2 * (kappa - 1) + 1):
        p = ceil(i / 2)
        side = 1 if i % 2 else 2
        keep = picked[p - 1] if side == 1 else picked[p]
        targets = [_ev(r, p, hh, side) for hh in range(1, m + 1) if hh != keep]
        for j, target in zip(range(1, m), targets):
            sl.slide(_u(i, j), target)
            sl.slide(_w(i, j), _u(i, j))
    s = construction.extra["depth"]
    for d in range(1, s + 1):
        idx = ((r - 1) >> (s - d)) ^ 1
        sl.slide(f"v:{d}", f"G{idx + 1}/s" if d == s else _node(d, idx))
    return sl.sequence()
