"""OR-compositions of equally sized MMO instances through the instance selector."""
from __future__ import annotations

from typing import Sequence

from ..discovery import DiscoveryInstance, Problem
from ..errors import PreconditionError
from .forge import Forge, LabeledConstruction, Provenance
from .formulas import WIDTH_MARGINS, budget, budget_formula
from .gadgets import END, X, emit_GH, emit_selector
from .reductions import dsd_graph, dsd_tokens, edge_units, isd_tokens, vcd_graph, vcd_tokens
from .sources import MMOInstance


def prefix(j: int) -> str:
    return f"H{j}/"


def check_same_class(mmos: Sequence[MMOInstance]) -> dict[str, int]:
    """All members must agree on n, m, total weight and r; returns those values."""
    if not mmos:
        raise PreconditionError("composition needs at least one instance")
    first = mmos[0]
    want = {"n": first.n, "m": first.m, "sigma": first.total_weight, "r": first.r}
    for j, mmo in enumerate(mmos[1:], start=2):
        got = {"n": mmo.n, "m": mmo.m, "sigma": mmo.total_weight, "r": mmo.r}
        for key in want:
            if got[key] != want[key]:
                raise PreconditionError(
                    f"instance {j} has {key}={got[key]} but instance 1 has {key}={want[key]}")
    if want["m"] < 1:
        raise PreconditionError("compositions need instances with at least one edge")
    return want


def _frame(f: Forge, t: int, m: int, sigma: int, pendants: int) -> None:
    """Selector vertices, optional pendants on h and q, and the selector's own bags."""
    emit_selector(f, t, m, sigma)
    hq = ["h", "q"]
    f.bag(hq)
    for hub in hq:
        for i in range(1, pendants + 1):
            f.vertex(f"{hub}-pendant:{i}")
            f.edge(hub, f"{hub}-pendant:{i}")
            f.bag(hq + [f"{hub}-pendant:{i}"])
    for i in range(1, sigma + 1):
        f.bag(hq + [f"f:{i}", f"g:{i}"])
    for i in range(1, m + 1):
        f.bag(hq + [f"o:{i}", f"p:{i}"])


def _member_bags(f: Forge, start: int, j: int) -> None:
    extra = {f[x] for x in ("h", "q", f"select:{j}", f"unselect:{j}")}
    for bag in f.bags[start:]:
        bag.update(extra)


def _finish(f, mmos, problem, kind, tokens, notes) -> LabeledConstruction:
    lc = f.freeze()
    params = dict(check_same_class(mmos))
    params["t"] = len(mmos)
    params["pw"] = max(m.pd.width for m in mmos)
    b = budget(kind, params)
    inst = DiscoveryInstance(problem, lc.graph, [f[x] for x in tokens], b)
    margin = WIDTH_MARGINS[kind]
    prov = Provenance(kind, budget_formula(kind), params, params["pw"] + margin,
                      f"max pw(H_j) + {margin}", tuple(notes))
    out = lc.with_instance(inst, prov)
    object.__setattr__(out, "extra", {"kind": kind, "sources": tuple(mmos)})
    return out


def _ends(mmo: MMOInstance, p: str) -> list[str]:
    return [END(p, e, x) for e, u, v, s in edge_units(mmo) for x in (u, v)]


def _targets(mmo: MMOInstance, p: str) -> list[str]:
    return [X(p, v, j) for v in range(mmo.n) for j in range(1, mmo.r + 1)]


def compose_vcd(mmos: Sequence[MMOInstance]) -> LabeledConstruction:
    cls = check_same_class(mmos)
    t, m, sigma = len(mmos), cls["m"], cls["sigma"]
    f = Forge()
    _frame(f, t, m, sigma, 2 * m + 5 * sigma + 2)
    tokens = ["h", "q"]
    for j, mmo in enumerate(mmos, start=1):
        p = prefix(j)
        start = len(f.bags)
        vcd_graph(f, mmo, p)
        inner = vcd_tokens(mmo, p) + _targets(mmo, p)
        for v in inner:
            f.edge(f"select:{j}", v)
        for x in _targets(mmo, p):
            f.edge("h", x)
        for x in _ends(mmo, p):
            f.edge("q", x)
        _member_bags(f, start, j)
        tokens += inner + [f"unselect:{j}"]
    return _finish(f, mmos, Problem.VC, "vcd-comp", tokens,
                   ["edges Select_j-(S inside G_Hj)", "edges h-X", "edges q-ends"])


def compose_isd(mmos: Sequence[MMOInstance]) -> LabeledConstruction:
    cls = check_same_class(mmos)
    t, m, sigma = len(mmos), cls["m"], cls["sigma"]
    f = Forge()
    _frame(f, t, m, sigma, 0)
    tokens = [f"f:{i}" for i in range(1, sigma + 1)] + [f"g:{i}" for i in range(1, sigma + 1)]
    tokens += [f"o:{i}" for i in range(1, m + 1)] + [f"p:{i}" for i in range(1, m + 1)]
    for j, mmo in enumerate(mmos, start=1):
        p = prefix(j)
        start = len(f.bags)
        first = len(f.names)
        emit_GH(f, mmo, p)
        ahat = []
        for e, u, v, s in edge_units(mmo):
            for i in range(1, s + 2):
                ahat.append(f"{p}a:{e[0]}-{e[1]}:{i}")
                f.edge("h" if i <= s else "q", ahat[-1])
        # the member's start tokens are those of the IS reduction minus A and A+
        inner = [x for x in isd_tokens(mmo, p) if x not in set(ahat)]
        keep = set(inner)
        for v in range(first, len(f.names)):
            if f.names[v] not in keep:
                f.edge(f"unselect:{j}", v)
        _member_bags(f, start, j)
        tokens += inner + [f"unselect:{j}"]
    return _finish(f, mmos, Problem.IS, "isd-comp", tokens,
                   ["edges Unselect_j-(G_Hj minus S)", "edges h-A", "edges q-A+",
                    "h and q carry no start token"])


def compose_dsd(mmos: Sequence[MMOInstance]) -> LabeledConstruction:
    cls = check_same_class(mmos)
    t, m, sigma = len(mmos), cls["m"], cls["sigma"]
    f = Forge()
    _frame(f, t, m, sigma, 0)
    tokens = []
    for j, mmo in enumerate(mmos, start=1):
        p = prefix(j)
        start = len(f.bags)
        dsd_graph(f, mmo, p)
        inner = [x for x in dsd_tokens(mmo, p)]
        inner += [f"{p}a:{e[0]}-{e[1]}:{s + 1}" for e, u, v, s in edge_units(mmo)]
        inner += _targets(mmo, p)
        for x in _targets(mmo, p):
            f.edge("h", x)
        for x in _ends(mmo, p):
            f.edge("q", x)
        _member_bags(f, start, j)
        for i, v in enumerate(inner):
            f.edge(f"select:{j}", v)
            f.subdivide(f"select:{j}", v, [f"{p}sel:{i + 1}"])
        tokens += inner + [f"unselect:{j}"]
    return _finish(f, mmos, Problem.DS, "dsd-comp", tokens,
                   ["length-2 paths Select_j-(S inside G_Hj)", "edges h-X", "edges q-ends",
                    "edges d_j-c(Y_j)"])
