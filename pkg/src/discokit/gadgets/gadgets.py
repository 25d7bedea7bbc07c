"""Edge, vertex, supplier and selector gadgets, and the combined graph G_H."""
from __future__ import annotations

from typing import Mapping

from ..errors import InvalidArgument, PreconditionError
from ..graph import EdgeId, edge_id
from ..pathdecomp import make_nice
from .forge import Forge, LabeledConstruction
from .sources import MMOInstance


def etag(e: EdgeId) -> str:
    return f"{e[0]}-{e[1]}"


# label helpers; `p` is a per-instance prefix used by the compositions
def A(p, e, j): return f"{p}a:{etag(e)}:{j}"
def B(p, e, j): return f"{p}b:{etag(e)}:{j}"
def END(p, e, x): return f"{p}end:{etag(e)}:{x}"
def W(p, v): return f"{p}w:{v}"
def X(p, v, j): return f"{p}x:{v}:{j}"
def Y(p, e, v, j): return f"{p}y:{etag(e)}:{v}:{j}"
def Z(p, e, v, j): return f"{p}z:{etag(e)}:{v}:{j}"


def _edge_gadget_into(f: Forge, e: EdgeId, s: int, p: str = "") -> None:
    u, v = e
    for j in range(1, s + 2):
        f.vertex(A(p, e, j))
    for j in range(1, s + 2):
        f.vertex(B(p, e, j))
    f.vertex(END(p, e, u))
    f.vertex(END(p, e, v))
    for j in range(1, s + 2):
        f.edge(A(p, e, j), B(p, e, j))
    f.edge(END(p, e, u), END(p, e, v))
    f.edge(B(p, e, s + 1), END(p, e, u))
    f.edge(B(p, e, s + 1), END(p, e, v))


def _vertex_gadget_into(f: Forge, v: int, r: int, incident: Mapping[EdgeId, int], p: str = "") -> None:
    f.vertex(W(p, v))
    for j in range(1, r + 2):
        f.vertex(X(p, v, j))
        f.edge(W(p, v), X(p, v, j))
    for e in sorted(incident):
        for j in range(1, incident[e] + 1):
            f.vertex(Y(p, e, v, j))
            f.vertex(Z(p, e, v, j))
            f.edge(W(p, v), Y(p, e, v, j))
            f.edge(Y(p, e, v, j), Z(p, e, v, j))


def _single_bag(f: Forge) -> LabeledConstruction:
    f.bag(range(len(f.names)))
    return f.freeze()


def build_edge_gadget(e: EdgeId, sigma_e: int) -> LabeledConstruction:
    """The gadget for one weighted edge: sigma_e + 1 matching edges and a selector triangle."""
    if sigma_e < 1:
        raise InvalidArgument("edge weight must be positive")
    f = Forge()
    _edge_gadget_into(f, edge_id(*e), sigma_e)
    return _single_bag(f)


def build_vertex_gadget(v: int, r: int, incident: Mapping[EdgeId, int]) -> LabeledConstruction:
    """Representative w_v with r + 1 targets and one y-z pendant edge per unit of incident weight."""
    if r < 1:
        raise InvalidArgument("threshold r must be positive")
    f = Forge()
    _vertex_gadget_into(f, v, r, {edge_id(*e): w for e, w in incident.items()})
    return _single_bag(f)


def emit_GH(f: Forge, mmo: MMOInstance, p: str = "") -> None:
    """Add G_H (vertices, edges and bags) to `f` under label prefix `p`."""
    h = mmo.h
    for e in h.edge_list:
        _edge_gadget_into(f, e, mmo.sigma[e], p)
    for v in range(h.n):
        inc = {e: mmo.sigma[e] for e in h.edge_list if v in e}
        _vertex_gadget_into(f, v, mmo.r, inc, p)
    for u, v in h.edge_list:
        e = (u, v)
        for end in (u, v):
            for j in range(1, mmo.sigma[e] + 1):
                f.edge(B(p, e, j), Z(p, e, end, j))
                f.edge(END(p, e, end), Y(p, e, end, j))
    _emit_GH_bags(f, mmo, p)


def _emit_GH_bags(f: Forge, mmo: MMOInstance, p: str) -> None:
    # One pass over a nice decomposition of H.  Every bag carries the
    # representatives of the current H-bag; gadget vertices come and go in
    # small groups so that at most five extra vertices are live at once.
    nice = make_nice(mmo.pd, mmo.h).bags
    cur: set[int] = set()
    for prev, nxt in zip(nice, nice[1:]):
        if len(nxt) < len(prev):
            (gone,) = prev - nxt
            cur.discard(gone)
            f.bag(W(p, x) for x in cur)
            continue
        (v,) = nxt - prev
        cur.add(v)
        base = [W(p, x) for x in cur]
        f.bag(base)
        for j in range(1, mmo.r + 2):
            f.bag(base + [X(p, v, j)])
        for u in sorted(prev):
            if not mmo.h.has_edge(u, v):
                continue
            e = edge_id(u, v)
            s = mmo.sigma[e]
            eu, ev = END(p, e, e[0]), END(p, e, e[1])
            two = base + [eu, ev]
            bp, ap = B(p, e, s + 1), A(p, e, s + 1)
            f.bag(base + [eu])
            for extra in ([], [bp], [bp, ap], [bp], []):
                f.bag(two + extra)
            for j in range(1, s + 1):
                a, b = A(p, e, j), B(p, e, j)
                steps = [[a], [a, b], [b]]
                for end in e:
                    z, y = Z(p, e, end, j), Y(p, e, end, j)
                    steps += [[b, z], [b, z, y], [b, y], [b]]
                for extra in steps:
                    f.bag(two + extra)
                f.bag(two)
            f.bag(base + [ev])
            f.bag(base)


def build_GH(mmo: MMOInstance) -> LabeledConstruction:
    f = Forge()
    emit_GH(f, mmo)
    return f.freeze()


def supplier_count(mmo: MMOInstance) -> int:
    return mmo.r * mmo.n - mmo.total_weight


def emit_supplier(f: Forge, mmo: MMOInstance) -> None:
    """Supplier s with rn - sigma donor paths and one pendant; bags go in front."""
    k = supplier_count(mmo)
    if k < 0:
        raise PreconditionError(f"r*n = {mmo.r * mmo.n} is below the total weight {mmo.total_weight}")
    f.vertex("s")
    front = [{f["s"]}]
    for i in range(1, k + 1):
        d1, d2, d3 = f.vertices([f"d1:{i}", f"d2:{i}", f"d3:{i}"])
        f.edge("s", d1)
        f.edge(d1, d2)
        f.edge(d2, d3)
        front += [{f["s"], d1, d2}, {f["s"], d2, d3}]
    last = f.vertex(f"d1:{k + 1}")
    f.edge("s", last)
    front.append({f["s"], last})
    f.add_to_all_bags("s")
    f.bags[0:0] = front


def attach_supplier(gh: LabeledConstruction, mmo: MMOInstance) -> LabeledConstruction:
    """G_H plus the supplier gadget; s is left unwired (each reduction wires it)."""
    f = Forge.thaw(gh)
    emit_supplier(f, mmo)
    return f.freeze()


def emit_selector(f: Forge, t: int, m: int, sigma: int) -> None:
    for j in range(1, t + 1):
        f.vertex(f"select:{j}")
        f.vertex(f"unselect:{j}")
        f.edge(f"select:{j}", f"unselect:{j}")
    f.vertex("h")
    for i in range(1, sigma + 1):
        f.vertices([f"f:{i}", f"g:{i}"])
        f.edge(f"f:{i}", f"g:{i}")
        f.edge("h", f"f:{i}")
    f.vertex("q")
    for i in range(1, m + 1):
        f.vertices([f"o:{i}", f"p:{i}"])
        f.edge(f"o:{i}", f"p:{i}")
        f.edge("q", f"o:{i}")


def build_selector(t: int, m: int, sigma: int) -> LabeledConstruction:
    """Instance selector: t Select/Unselect edges, a weights hub h and an orientations quay q."""
    if min(t, m, sigma) < 1:
        raise InvalidArgument("t, m and sigma must all be positive")
    f = Forge()
    emit_selector(f, t, m, sigma)
    hq = [f["h"], f["q"]]
    for j in range(1, t + 1):
        f.bag(hq + [f[f"select:{j}"], f[f"unselect:{j}"]])
    for i in range(1, sigma + 1):
        f.bag(hq + [f[f"f:{i}"], f[f"g:{i}"]])
    for i in range(1, m + 1):
        f.bag(hq + [f[f"o:{i}"], f[f"p:{i}"]])
    return f.freeze()
