"""Single-instance reductions from MMO to VC, IS and DS discovery."""
from __future__ import annotations

from ..discovery import DiscoveryInstance, Problem
from ..errors import PreconditionError
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import WIDTH_MARGINS, budget, budget_formula
from .gadgets import A, B, END, W, X, Y, Z, emit_GH, emit_supplier, etag, supplier_count
from .sources import MMOInstance


def mmo_params(mmo: MMOInstance) -> dict[str, int]:
    return {"n": mmo.n, "m": mmo.m, "sigma": mmo.total_weight, "r": mmo.r, "pw": mmo.pd.width}


def _check_supply(mmo: MMOInstance) -> None:
    if supplier_count(mmo) < 0:
        raise PreconditionError(
            f"r*n = {mmo.r * mmo.n} is below the total weight {mmo.total_weight}; "
            "such MMO instances are trivially no")


def _finish(f: Forge, mmo: MMOInstance, problem: Problem, kind: str, tokens, notes=()) -> LabeledConstruction:
    lc = f.freeze()
    params = mmo_params(mmo)
    b = budget(kind, params)
    inst = DiscoveryInstance(problem, lc.graph, [f[x] for x in tokens], b)
    prov = Provenance(kind, budget_formula(kind), params,
                      params["pw"] + WIDTH_MARGINS[kind], f"pw(H) + {WIDTH_MARGINS[kind]}", tuple(notes))
    out = lc.with_instance(inst, prov)
    object.__setattr__(out, "extra", {"kind": kind, "sources": (mmo,)})
    return out


def edge_units(mmo: MMOInstance):
    """(edge, u, v, sigma) for every edge of H in canonical order."""
    for e in mmo.h.edge_list:
        yield e, e[0], e[1], mmo.sigma[e]


def vcd_graph(f: Forge, mmo: MMOInstance, p: str = "") -> None:
    """G_H with the a-b and w-x subdivisions used by the vertex cover constructions."""
    emit_GH(f, mmo, p)
    for e, u, v, s in edge_units(mmo):
        for j in range(1, s + 1):
            f.subdivide(A(p, e, j), B(p, e, j), [f"{p}c:{etag(e)}:{j}"])
    for v in range(mmo.n):
        for j in range(1, mmo.r + 1):
            f.subdivide(W(p, v), X(p, v, j), [f"{p}cx:{v}:{j}"])


def vcd_tokens(mmo: MMOInstance, p: str = "") -> list[str]:
    out = []
    for e, u, v, s in edge_units(mmo):
        out += [f"{p}c:{etag(e)}:{j}" for j in range(1, s + 1)]
        out += [B(p, e, j) for j in range(1, s + 1)]
        out += [END(p, e, u), END(p, e, v)]
        for x in (u, v):
            out += [Y(p, e, x, j) for j in range(1, s + 1)]
    out += [W(p, v) for v in range(mmo.n)]
    return out


def reduce_vcd(mmo: MMOInstance) -> LabeledConstruction:
    _check_supply(mmo)
    f = Forge()
    vcd_graph(f, mmo)
    emit_supplier(f, mmo)
    for v in range(mmo.n):
        for j in range(1, mmo.r + 1):
            f.edge("s", X("", v, j))
    tokens = vcd_tokens(mmo) + ["s"]
    for i in range(1, supplier_count(mmo) + 1):
        tokens += [f"d1:{i}", f"d3:{i}"]
    return _finish(f, mmo, Problem.VC, "vcd-red", tokens,
                   ["edges b-z to both endpoint gadgets", "edges e^v-Y^v", "edges s-X"])


def isd_tokens(mmo: MMOInstance, p: str = "") -> list[str]:
    out = []
    for e, u, v, s in edge_units(mmo):
        out += [A(p, e, j) for j in range(1, s + 2)]
        out += [B(p, e, j) for j in range(1, s + 2)]
        for x in (u, v):
            out += [Y(p, e, x, j) for j in range(1, s + 1)]
    out += [X(p, v, mmo.r + 1) for v in range(mmo.n)]
    return out


def reduce_isd(mmo: MMOInstance) -> LabeledConstruction:
    f = Forge()
    emit_GH(f, mmo)
    return _finish(f, mmo, Problem.IS, "isd-red", isd_tokens(mmo),
                   ["edges b-z to both endpoint gadgets", "edges e^v-Y^v"])


def dsd_graph(f: Forge, mmo: MMOInstance, p: str = "") -> None:
    """Doubly subdivided G_H with the dominator edge d-d' (the augmented subdivision)."""
    start = len(f.bags)
    emit_GH(f, mmo, p)
    for e, u, v, s in edge_units(mmo):
        t = etag(e)
        for j in range(1, s + 1):
            f.subdivide(A(p, e, j), B(p, e, j), [f"{p}c:{t}:{j}", f"{p}c2:{t}:{j}"])
        f.subdivide(A(p, e, s + 1), B(p, e, s + 1), [f"{p}c:{t}:{s + 1}"])
        for x in (u, v):
            for j in range(1, s + 1):
                f.subdivide(W(p, x), Y(p, e, x, j), [f"{p}cy:{t}:{x}:{j}"])
                f.subdivide(END(p, e, x), Y(p, e, x, j), [f"{p}cy2:{t}:{x}:{j}"])
    for v in range(mmo.n):
        for j in range(1, mmo.r + 2):
            f.subdivide(W(p, v), X(p, v, j), [f"{p}cx:{v}:{j}"])
    d, d2 = f.vertices([f"{p}dom", f"{p}dom2"])
    f.edge(d, d2)
    for e, u, v, s in edge_units(mmo):
        for x in (u, v):
            for j in range(1, s + 1):
                f.edge(d, f"{p}cy:{etag(e)}:{x}:{j}")
    for bag in f.bags[start:]:
        bag.update((d, d2))


def build_augmented_GH(mmo: MMOInstance) -> LabeledConstruction:
    """The doubly subdivided G_H with its dominator edge, without tokens or supplier."""
    f = Forge()
    dsd_graph(f, mmo)
    return f.freeze()


def dsd_tokens(mmo: MMOInstance, p: str = "") -> list[str]:
    out = []
    for e, u, v, s in edge_units(mmo):
        out += [f"{p}c:{etag(e)}:{j}" for j in range(1, s + 1)]
        out += [B(p, e, j) for j in range(1, s + 1)]
        out += [END(p, e, u), END(p, e, v)]
        for x in (u, v):
            out += [Y(p, e, x, j) for j in range(1, s + 1)]
    out += [f"{p}cx:{v}:{mmo.r + 1}" for v in range(mmo.n)]
    out.append(f"{p}dom")
    return out


def reduce_dsd(mmo: MMOInstance) -> LabeledConstruction:
    _check_supply(mmo)
    f = Forge()
    dsd_graph(f, mmo)
    emit_supplier(f, mmo)
    for i in range(1, supplier_count(mmo) + 1):
        f.subdivide(f"d1:{i}", f"d2:{i}", [f"d1p:{i}", f"d2m:{i}"])
        f.subdivide(f"d2:{i}", f"d3:{i}", [f"d2p:{i}", f"d3m:{i}"])
    for v in range(mmo.n):
        for j in range(1, mmo.r + 1):
            f.edge("s", X("", v, j))
    tokens = dsd_tokens(mmo) + ["s"]
    for i in range(1, supplier_count(mmo) + 1):
        tokens += [f"d1:{i}", f"d2:{i}", f"d3:{i}"]
    return _finish(f, mmo, Problem.DS, "dsd-red", tokens,
                   ["edges b-z to both endpoint gadgets", "paths e^v-Y^v", "edges s-X", "edges d-c(Y)"])
