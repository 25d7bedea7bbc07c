"""Multicolored-clique reductions producing graphs with a small feedback vertex set."""
from __future__ import annotations

from itertools import combinations
from math import comb

from ..discovery import DiscoveryInstance, DiscoverySequence, Problem
from ..errors import PreconditionError
from ..graph import bfs_distances
from ..pathdecomp import FvsCertificate, from_vertex_order
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import budget, budget_formula
from .sources import MCCInstance, solve_mcc
from .witness import Slides

_KIND = {"DS": "fvs-dsd", "VC": "fvs-vcd", "IS": "fvs-isd"}


def _q(i, x, j, z): return f"q:{i}:{x}:{j}:{z}"
def _qe(e, z): return f"qe:{e[0]}-{e[1]}:{z}"
def _pe(e): return f"pe:{e[0]}-{e[1]}"
def _conn(kind, i, j, l, x=None):
    base = f"{kind}:{i},{j}:{l}"
    return base if x is None else f"{base}:{x}"


class _Layout:
    """Index bookkeeping shared by the three variants (classes and positions are 1-based)."""

    def __init__(self, mcc: MCCInstance):
        self.mcc = mcc
        self.kappa = mcc.kappa
        self.n = len(mcc.classes[0]) if mcc.classes else 0
        if any(len(c) != self.n for c in mcc.classes):
            raise AssertionError("colour classes must be padded to equal size")
        self.where = {v: (i + 1, x + 1) for i, c in enumerate(mcc.classes) for x, v in enumerate(c)}
        self.pairs = list(combinations(range(1, self.kappa + 1), 2))
        self.E = {pr: [] for pr in self.pairs}
        for u, v in mcc.graph.edge_list:
            (iu, xu), (iv, xv) = self.where[u], self.where[v]
            if iu > iv:
                u, v, (iu, xu), (iv, xv) = v, u, (iv, xv), (iu, xu)
            self.E[(iu, iv)].append((u, v))

    def pos(self, v):
        return self.where[v][1]


def _base(f: Forge, L: _Layout, problem: str) -> None:
    n, k = L.n, L.kappa
    for i in range(1, k + 1):
        f.vertex(f"t:{i}")
        for x in range(1, n + 1):
            f.vertex(f"p:{i}:{x}")
            f.edge(f"t:{i}", f"p:{i}:{x}")
            for j in range(1, k + 1):
                if j == i:
                    continue
                for z in range(1, n + 1):
                    f.vertex(_q(i, x, j, z))
                    f.edge(f"p:{i}:{x}", _q(i, x, j, z))
    for (i, j) in L.pairs:
        f.vertex(f"t:{i},{j}")
        for e in L.E[(i, j)]:
            f.vertex(_pe(e))
            # each p_e hangs off its own edge-block hub t_{i,j}
            f.edge(f"t:{i},{j}", _pe(e))
            for z in range(1, 2 * n + 1):
                f.vertex(_qe(e, z))
                f.edge(_pe(e), _qe(e, z))
    rows = ("ca", "cd") if problem == "IS" else ("ca", "cb", "cc", "cd")
    for (i, j) in L.pairs:
        for l in (i, j):
            f.vertex(_conn("s", i, j, l))
            f.vertex(_conn("r", i, j, l))
            for x in range(1, n + 1):
                for row in rows:
                    f.vertex(_conn(row, i, j, l, x))
                # connector rows: s - A - B and r - D - C
                f.edge(_conn("s", i, j, l), _conn("ca", i, j, l, x))
                f.edge(_conn("r", i, j, l), _conn("cd", i, j, l, x))
                if problem != "IS":
                    f.edge(_conn("ca", i, j, l, x), _conn("cb", i, j, l, x))
                    f.edge(_conn("cd", i, j, l, x), _conn("cc", i, j, l, x))


def _hub(kind_s: str, problem: str, side: str) -> str:
    """Which connector vertex a block leaf attaches to (VC routes through proxies)."""
    if problem != "VC":
        return kind_s
    return kind_s + ("t" if side == "vertex" else "h")


def _wire(f: Forge, L: _Layout, problem: str) -> None:
    n = L.n
    for (i, j) in L.pairs:
        for l in (i, j):
            lp = j if l == i else i
            for x in range(1, n + 1):
                for z in range(1, n + 1):
                    kind = "s" if z <= x else "r"
                    f.edge(_q(l, x, lp, z), _conn(_hub(kind, problem, "vertex"), i, j, l))
        for e in L.E[(i, j)]:
            x, y = L.pos(e[0]), L.pos(e[1])
            for z in range(1, n + 1):
                kind = "r" if z <= x else "s"
                f.edge(_qe(e, z), _conn(_hub(kind, problem, "edge"), i, j, i))
            for w in range(1, n + 1):
                kind = "r" if w <= y else "s"
                f.edge(_qe(e, n + w), _conn(_hub(kind, problem, "edge"), i, j, j))


def _vc_extras(f: Forge, L: _Layout) -> list[str]:
    for i in range(1, L.kappa + 1):
        f.vertex(f"tt:{i}")
        f.edge(f"t:{i}", f"tt:{i}")
    for (i, j) in L.pairs:
        f.vertex(f"tt:{i},{j}")
        f.edge(f"t:{i},{j}", f"tt:{i},{j}")
    fvs = []
    for (i, j) in L.pairs:
        for l in (i, j):
            for name in ("st", "sh", "rt", "rh"):
                f.vertex(_conn(name, i, j, l))
                f.edge(_conn(name[0], i, j, l), _conn(name, i, j, l))
                fvs.append(_conn(name, i, j, l))
    return fvs


def _is_extras(f: Forge, L: _Layout) -> list[str]:
    n, k = L.n, L.kappa
    fvs = []
    for i in range(1, k + 1):
        f.vertex(f"tt:{i}")
        fvs.append(f"tt:{i}")
        for c in range(1, n * (n - 1) * (k - 1) + 1):
            f.vertex(f"T:{i}:{c}")
            f.edge(f"tt:{i}", f"T:{i}:{c}")
        for x in range(1, n + 1):
            for j in range(1, k + 1):
                if j == i:
                    continue
                for z in range(1, n + 1):
                    q = _q(i, x, j, z)
                    f.vertex("b@" + q)
                    f.edge(q, "b@" + q)
                    f.edge(f"tt:{i}", "b@" + q)
        f.vertex(f"th:{i}")
        f.edge(f"t:{i}", f"th:{i}")
    for (i, j) in L.pairs:
        f.vertex(f"tt:{i},{j}")
        fvs.append(f"tt:{i},{j}")
        # an empty edge class would ask for -2n pendants; clamp at zero
        for c in range(1, max(0, 2 * n * len(L.E[(i, j)]) - 2 * n) + 1):
            f.vertex(f"T:{i},{j}:{c}")
            f.edge(f"tt:{i},{j}", f"T:{i},{j}:{c}")
        for e in L.E[(i, j)]:
            for z in range(1, 2 * n + 1):
                q = _qe(e, z)
                f.vertex("c@" + q)
                f.edge(q, "c@" + q)
                f.edge(f"tt:{i},{j}", "c@" + q)
        f.vertex(f"th:{i},{j}")
        f.edge(f"t:{i},{j}", f"th:{i},{j}")
        for l in (i, j):
            for name in ("st", "rt"):
                f.vertex(_conn(name, i, j, l))
                f.edge(_conn(name[0], i, j, l), _conn(name, i, j, l))
    for (i, j) in L.pairs:
        fvs += [_conn("s", i, j, i), _conn("r", i, j, i), _conn("s", i, j, j), _conn("r", i, j, j)]
    return fvs


def _tokens(f: Forge, L: _Layout, problem: str) -> list[str]:
    out = []
    for lab in f.names:
        head = lab.split(":", 1)[0]
        if head in ("q", "qe", "t"):
            out.append(lab)
        elif problem == "VC" and (head == "tt" or head in ("st", "sh", "rt", "rh")):
            out.append(lab)
        elif problem == "IS" and (lab.startswith("b@") or lab.startswith("c@") or head == "th"):
            out.append(lab)
    return out


def reduce_fvs(problem: str, mcc: MCCInstance) -> tuple[LabeledConstruction, FvsCertificate]:
    problem = problem.upper()
    if problem not in _KIND:
        raise PreconditionError(f"fvs reductions target VC, IS or DS, not {problem}")
    mcc = mcc.padded()
    if mcc.kappa < 2:
        raise PreconditionError("the fvs reductions need at least two colour classes")
    L = _Layout(mcc)
    f = Forge()
    _base(f, L, problem)
    if problem == "VC":
        fvs = _vc_extras(f, L)
        # VC leaves attach to proxy vertices next to s and r, never to s and r themselves
    elif problem == "IS":
        fvs = _is_extras(f, L)
    else:
        fvs = []
        for (i, j) in L.pairs:
            for l in (i, j):
                fvs += [_conn("s", i, j, l), _conn("r", i, j, l)]
    _wire(f, L, problem)
    kind = _KIND[problem]
    tokens = _tokens(f, L, problem)
    lc = f.freeze(check=False)
    dist = bfs_distances(lc.graph, [0]) if lc.graph.n else {}
    order = sorted(range(lc.graph.n), key=lambda v: dist.get(v, lc.graph.n))
    pd = from_vertex_order(lc.graph, order)
    params = {"n": L.n, "m": mcc.graph.m, "kappa": L.kappa}
    inst = DiscoveryInstance(Problem(problem), lc.graph, [f[x] for x in tokens], budget(kind, params))
    notes = ["connector rows wired s-A-B and r-D-C", "edge-block roots p_e attached to t_{i,j}"]
    if problem == "IS":
        notes.append("pendant set T_{i,j} clamped at zero for empty edge classes")
    prov = Provenance(kind, budget_formula(kind), params, None, "", tuple(notes))
    out = LabeledConstruction(lc.graph, pd, lc.names, inst, prov,
                              {"kind": kind, "sources": (mcc,), "layout": L})
    return out, FvsCertificate(f[x] for x in fvs)


def fvs_size(problem: str, kappa: int) -> int:
    return {"DS": 4 * comb(kappa, 2), "VC": 8 * comb(kappa, 2),
            "IS": 5 * comb(kappa, 2) + kappa}[problem.upper()]


def witness_from_clique(construction: LabeledConstruction, clique) -> DiscoverySequence:
    """Forward slide schedule for a multicolored clique (one vertex per class)."""
    kind = construction.extra.get("kind")
    if kind not in _KIND.values():
        raise PreconditionError("construction is not an fvs reduction")
    L: _Layout = construction.extra["layout"]
    mcc = L.mcc
    chosen = {}
    for v in clique:
        if v not in L.where:
            raise PreconditionError(f"vertex {v} is not in the source graph")
        chosen[L.where[v][0]] = v
    if len(chosen) != L.kappa or len(list(clique)) != L.kappa or \
            any(not mcc.graph.has_edge(a, b) for a, b in combinations(chosen.values(), 2)):
        raise PreconditionError("not a multicolored clique of the source instance")
    problem = {"fvs-dsd": "DS", "fvs-vcd": "VC", "fvs-isd": "IS"}[kind]
    xs = {i: L.pos(v) for i, v in chosen.items()}
    sl = Slides(construction)
    n, k = L.n, L.kappa

    def to_connector(leaf, hub_kind, i, j, l, side):
        s = _conn(hub_kind, i, j, l)
        row = "ca" if hub_kind == "s" else "cd"
        target = sl.first_free([_conn(row, i, j, l, x) for x in range(1, n + 1)])
        if problem == "VC":
            sl.move([leaf, _conn(_hub(hub_kind, "VC", side), i, j, l), s, target])
        else:
            sl.move([leaf, s, target])

    for i in range(1, k + 1):
        x = xs[i]
        if problem == "VC":
            sl.move([f"tt:{i}", f"t:{i}", f"p:{i}:{x}"])
        else:
            sl.slide(f"t:{i}", f"p:{i}:{x}")
        for j in range(1, k + 1):
            if j == i:
                continue
            a, b = min(i, j), max(i, j)
            for z in range(1, n + 1):
                to_connector(_q(i, x, j, z), "s" if z <= x else "r", a, b, i, "vertex")
        if problem == "IS":
            for x2 in range(1, n + 1):
                if x2 == x:
                    continue
                for j in range(1, k + 1):
                    if j == i:
                        continue
                    for z in range(1, n + 1):
                        free = sl.first_free([f"T:{i}:{c}" for c in range(1, n * (n - 1) * (k - 1) + 1)])
                        sl.move(["b@" + _q(i, x2, j, z), f"tt:{i}", free])
    for (i, j) in L.pairs:
        u, v = chosen[i], chosen[j]
        e = (u, v) if (u, v) in L.E[(i, j)] else (v, u)
        if problem == "VC":
            sl.move([f"tt:{i},{j}", f"t:{i},{j}", _pe(e)])
        else:
            sl.slide(f"t:{i},{j}", _pe(e))
        for z in range(1, n + 1):
            to_connector(_qe(e, z), "r" if z <= xs[i] else "s", i, j, i, "edge")
        for w in range(1, n + 1):
            to_connector(_qe(e, n + w), "r" if w <= xs[j] else "s", i, j, j, "edge")
        if problem == "IS":
            count = max(0, 2 * n * len(L.E[(i, j)]) - 2 * n)
            for e2 in L.E[(i, j)]:
                if e2 == e:
                    continue
                for z in range(1, 2 * n + 1):
                    free = sl.first_free([f"T:{i},{j}:{c}" for c in range(1, count + 1)])
                    sl.move(["c@" + _qe(e2, z), f"tt:{i},{j}", free])
    return sl.sequence()
