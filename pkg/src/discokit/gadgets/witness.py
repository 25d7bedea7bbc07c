"""Turn source-problem certificates into explicit discovery sequences."""
from __future__ import annotations

from ..discovery import DiscoverySequence, TokenConfiguration
from ..errors import PreconditionError
from .forge import LabeledConstruction
from .gadgets import B, END, W, X, Y, Z, etag
from .reductions import edge_units, supplier_count
from .sources import MMOInstance, Orientation, mmo_feasible


class Slides:
    """Records token slides on a construction, refusing illegal moves."""

    def __init__(self, lc: LabeledConstruction):
        self.lc = lc
        self.g = lc.graph
        self.tokens = set(lc.instance.start.members)
        self.history = [frozenset(self.tokens)]

    def _v(self, x) -> int:
        return x if isinstance(x, int) else self.lc.id(x)

    def occupied(self, x) -> bool:
        return self._v(x) in self.tokens

    def slide(self, a, b) -> None:
        u, v = self._v(a), self._v(b)
        if u not in self.tokens or v in self.tokens or not self.g.has_edge(u, v):
            raise AssertionError(f"illegal slide {self.lc.label(u)} -> {self.lc.label(v)}")
        self.tokens.discard(u)
        self.tokens.add(v)
        self.history.append(frozenset(self.tokens))

    def move(self, path) -> None:
        """Net effect: the token on path[0] ends on path[-1]; occupancy in between is unchanged.

        Tokens met on the way are pushed ahead one by one, so the cost is
        always len(path) - 1 slides.
        """
        ids = [self._v(x) for x in path]
        if ids[-1] in self.tokens:
            raise AssertionError(f"target {self.lc.label(ids[-1])} is occupied")
        occ = [i for i, v in enumerate(ids) if v in self.tokens]
        if not occ or occ[0] != 0:
            raise AssertionError("path must start on a token")
        end = len(ids) - 1
        for i in reversed(occ):
            for k in range(i, end):
                self.slide(ids[k], ids[k + 1])
            end = i

    def first_free(self, labels):
        for x in labels:
            if not self.occupied(x):
                return x
        raise AssertionError("no free vertex among the candidates")

    def sequence(self) -> DiscoverySequence:
        kind = self.lc.instance.start.kind
        return DiscoverySequence(tuple(TokenConfiguration(kind, c) for c in self.history))


def _oriented(mmo: MMOInstance, lam: Orientation):
    for e, u, v, s in edge_units(mmo):
        tail = lam.tail(e)
        head = v if tail == u else u
        yield e, tail, head, s


def _cx(p, v, r):
    return [f"{p}cx:{v}:{j}" for j in range(1, r + 1)]


def _vc_schedule(sl: Slides, mmo, lam, p=""):
    for e, tail, head, s in _oriented(mmo, lam):
        for i in range(1, s + 1):
            sl.move([Y(p, e, tail, i), W(p, tail), sl.first_free(_cx(p, tail, mmo.r))])
            sl.slide(B(p, e, i), Z(p, e, tail, i))
        sl.slide(END(p, e, head), B(p, e, s + 1))


def _is_schedule(sl: Slides, mmo, lam, p=""):
    for e, tail, head, s in _oriented(mmo, lam):
        for i in range(1, s + 1):
            sl.slide(B(p, e, i), Z(p, e, tail, i))
            xs = [X(p, tail, j) for j in range(1, mmo.r + 1)]
            sl.move([Y(p, e, tail, i), W(p, tail), sl.first_free(xs)])
        sl.slide(B(p, e, s + 1), END(p, e, tail))


def _ds_units(sl: Slides, mmo, e, tail, s, p=""):
    for i in range(1, s + 1):
        cx = sl.first_free(_cx(p, tail, mmo.r))
        sl.move([Y(p, e, tail, i), f"{p}cy:{etag(e)}:{tail}:{i}", W(p, tail), cx])
        sl.slide(B(p, e, i), Z(p, e, tail, i))


def _uncovered_targets(sl: Slides, mmo, p=""):
    """X vertices whose subdivision partner carries no token, in label order."""
    return [X(p, v, j) for v in range(mmo.n) for j in range(1, mmo.r + 1)
            if not sl.occupied(f"{p}cx:{v}:{j}") and not sl.occupied(X(p, v, j))]


def _reduction(kind, lc, mmo, lam) -> Slides:
    sl = Slides(lc)
    if kind == "vcd-red":
        _vc_schedule(sl, mmo, lam)
        for i in range(1, supplier_count(mmo) + 1):
            sl.slide(f"d3:{i}", f"d2:{i}")
            sl.move([f"d1:{i}", "s", _uncovered_targets(sl, mmo)[0]])
    elif kind == "isd-red":
        _is_schedule(sl, mmo, lam)
    elif kind == "dsd-red":
        for e, tail, head, s in _oriented(mmo, lam):
            _ds_units(sl, mmo, e, tail, s)
            sl.move([END("", e, head), B("", e, s + 1), f"c:{etag(e)}:{s + 1}"])
        for i in range(1, supplier_count(mmo) + 1):
            sl.slide(f"d3:{i}", f"d3m:{i}")
            sl.slide(f"d2:{i}", f"d2m:{i}")
            sl.move([f"d1:{i}", "s", _uncovered_targets(sl, mmo)[0]])
    return sl


def _composition(kind, lc, mmo, lam, j) -> Slides:
    p = f"H{j}/"
    sl = Slides(lc)
    sl.slide(f"unselect:{j}", f"select:{j}")
    sigma, m = mmo.total_weight, mmo.m
    fs = [f"f:{i}" for i in range(1, sigma + 1)]
    os_ = [f"o:{i}" for i in range(1, m + 1)]
    if kind == "isd-comp":
        a_free = [f"{p}a:{etag(e)}:{i}" for e, u, v, s in edge_units(mmo) for i in range(1, s + 1)]
        for f_, a in zip(fs, a_free):
            sl.move([f_, "h", a])
        for o, (e, u, v, s) in zip(os_, edge_units(mmo)):
            sl.move([o, "q", f"{p}a:{etag(e)}:{s + 1}"])
        _is_schedule(sl, mmo, lam, p)
        return sl
    for e, tail, head, s in _oriented(mmo, lam):
        sl.move([END(p, e, head), "q", sl.first_free(os_)])
    for e, tail, head, s in _oriented(mmo, lam):
        for i in range(1, s + 1):
            cx = sl.first_free(_cx(p, tail, mmo.r))
            x = X(p, tail, int(cx.rsplit(":", 1)[1]))
            if kind == "vcd-comp":
                sl.slide(B(p, e, i), Z(p, e, tail, i))
                sl.move([Y(p, e, tail, i), W(p, tail), cx])
            else:
                sl.slide(B(p, e, i), Z(p, e, tail, i))
                sl.move([Y(p, e, tail, i), f"{p}cy:{etag(e)}:{tail}:{i}", W(p, tail), cx])
            sl.move([x, "h", sl.first_free(fs)])
    return sl


_ALIASES = {
    "reduce_vcd": "vcd-red", "reduce_isd": "isd-red", "reduce_dsd": "dsd-red",
    "compose_vcd": "vcd-comp", "compose_isd": "isd-comp", "compose_dsd": "dsd-comp",
}


def witness_from_orientation(kind: str, construction: LabeledConstruction, source_witness) -> DiscoverySequence:
    """Replay the forward proof's slide schedule for a feasible orientation.

    For compositions `source_witness` is a pair (j, orientation) naming the
    1-based member it orients; a bare orientation selects the first member it
    is feasible for.
    """
    kind = _ALIASES.get(kind, kind)
    built = construction.extra.get("kind")
    if built != kind:
        raise PreconditionError(f"construction was built as {built}, not {kind}")
    sources = construction.extra["sources"]
    if kind.endswith("-red"):
        mmo = sources[0]
        lam = source_witness
        if not isinstance(lam, Orientation) or not mmo_feasible(mmo, lam):
            raise PreconditionError("orientation is not feasible for the source instance")
        return _reduction(kind, construction, mmo, lam).sequence()
    if isinstance(source_witness, Orientation):
        picks = [j for j, mmo in enumerate(sources, start=1) if mmo_feasible(mmo, source_witness)]
        if not picks:
            raise PreconditionError("orientation is feasible for no member instance")
        j, lam = picks[0], source_witness
    else:
        j, lam = source_witness
        if not (1 <= j <= len(sources)) or not isinstance(lam, Orientation) \
                or not mmo_feasible(sources[j - 1], lam):
            raise PreconditionError(f"orientation is not feasible for member {j}")
    return _composition(kind, construction, sources[j - 1], lam, j).sequence()
