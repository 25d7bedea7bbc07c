"""Token sliding: problem predicates, the exact breadth-first solver and witness checks."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InvalidArgument, ResourceLimit
from .graph import EdgeId, Graph, bfs_distances, edge_id
from .verdict import Verdict

DEFAULT_STATE_CAP = 50_000_000


class Problem(str, Enum):
    VC = "VC"
    IS = "IS"
    DS = "DS"
    SP = "SP"
    MAT = "MAT"
    VCUT = "VCUT"

    @property
    def edge_tokens(self) -> bool:
        return self is Problem.MAT

    @property
    def needs_terminals(self) -> bool:
        return self in (Problem.SP, Problem.VCUT)


@dataclass(frozen=True)
class TokenConfiguration:
    kind: str  # "vertex" or "edge"
    members: frozenset

    @classmethod
    def vertices(cls, vs: Iterable[int]) -> "TokenConfiguration":
        return cls("vertex", frozenset(vs))

    @classmethod
    def edges(cls, es: Iterable) -> "TokenConfiguration":
        return cls("edge", frozenset(edge_id(*e) for e in es))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, x) -> bool:
        return x in self.members


def _as_config(problem: Problem, c) -> TokenConfiguration:
    if isinstance(c, TokenConfiguration):
        want = "edge" if problem.edge_tokens else "vertex"
        if c.kind != want:
            raise InvalidArgument(f"{problem.value} uses {want} tokens, got {c.kind} tokens")
        return c
    return TokenConfiguration.edges(c) if problem.edge_tokens else TokenConfiguration.vertices(c)


@dataclass(frozen=True)
class DiscoveryInstance:
    problem: Problem
    graph: Graph
    start: TokenConfiguration
    budget: int
    terminals: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "problem", Problem(self.problem))
        p = self.problem
        object.__setattr__(self, "start", _as_config(p, self.start))
        if self.budget < 0:
            raise InvalidArgument("budget must be nonnegative")
        g = self.graph
        for x in self.start.members:
            if p.edge_tokens:
                if x not in g.edges:
                    raise InvalidArgument(f"token edge {x[0]}-{x[1]} is not in the graph")
            elif not (0 <= x < g.n):
                raise InvalidArgument(f"token vertex {x} is not in the graph")
        if p.needs_terminals:
            if self.terminals is None:
                raise InvalidArgument(f"{p.value} needs a terminal pair")
            a, b = self.terminals
            object.__setattr__(self, "terminals", (a, b))
            if not (0 <= a < g.n and 0 <= b < g.n):
                raise InvalidArgument("terminal outside the graph")
            if p is Problem.VCUT and (a in self.start.members or b in self.start.members):
                raise InvalidArgument("VCUT terminals must carry no token")
        elif self.terminals is not None:
            raise InvalidArgument(f"{p.value} takes no terminals")

    @property
    def k(self) -> int:
        return len(self.start)

    def with_budget(self, budget: int) -> "DiscoveryInstance":
        return DiscoveryInstance(self.problem, self.graph, self.start, budget, self.terminals)


@dataclass(frozen=True)
class DiscoverySequence:
    configs: tuple[TokenConfiguration, ...]

    def __len__(self) -> int:
        return len(self.configs)

    @property
    def slides(self) -> int:
        return len(self.configs) - 1


@dataclass(frozen=True)
class SolveResult:
    decision: bool
    min_slides: int | None
    witness: DiscoverySequence | None
    explored: int

    def __bool__(self) -> bool:
        return self.decision


# ---------------------------------------------------------------------------
# Position encoding shared by the predicates and the solver.  Tokens sit on
# positions: vertex ids, or indices into graph.edge_list for edge tokens.

class _Space:
    def __init__(self, inst: DiscoveryInstance):
        g = inst.graph
        self.problem = inst.problem
        if inst.problem.edge_tokens:
            self.items = list(g.edge_list)
            index = {e: i for i, e in enumerate(self.items)}
            nbs = []
            for u, v in self.items:
                s = {index[edge_id(x, w)] for x in (u, v) for w in g.adj[x]}
                s.discard(index[(u, v)])
                nbs.append(sorted(s))
            self.index = index
        else:
            self.items = list(range(g.n))
            self.index = None
            nbs = [sorted(g.adj[v]) for v in range(g.n)]
        P = self.P = len(self.items)
        self.bits = [1 << (P - 1 - p) for p in range(P)]
        self.nb = nbs
        self.nbmask = [sum(self.bits[q] for q in ns) for ns in nbs]
        self.full = (1 << P) - 1
        self._setup_predicate(inst)

    def pos(self, x) -> int:
        return self.index[edge_id(*x)] if self.index is not None else x

    def encode(self, c: TokenConfiguration) -> int:
        m = 0
        for x in c.members:
            m |= self.bits[self.pos(x)]
        return m

    def decode(self, mask: int) -> TokenConfiguration:
        P = self.P
        ps = [P - 1 - i for i in range(P) if mask >> i & 1]
        vals = [self.items[p] for p in ps]
        return TokenConfiguration("edge" if self.index is not None else "vertex", frozenset(vals))

    def successors(self, mask: int) -> list[int]:
        """One-slide neighbours, lexicographically least first."""
        out = set()
        bits, nb = self.bits, self.nb
        for p in range(self.P):
            bp = bits[p]
            if mask & bp:
                for q in nb[p]:
                    bq = bits[q]
                    if not mask & bq:
                        out.add(mask ^ bp ^ bq)
        return sorted(out, reverse=True)

    def _setup_predicate(self, inst: DiscoveryInstance):
        prob = inst.problem
        g = inst.graph
        bits = self.bits
        if prob is Problem.VC:
            ems = [bits[u] | bits[v] for u, v in g.edge_list]
            self.feasible = lambda c: all(c & em for em in ems)
        elif prob in (Problem.IS, Problem.MAT):
            nbm = self.nbmask
            P = self.P

            def indep(c):
                for p in range(P):
                    if c & bits[p] and c & nbm[p]:
                        return False
                return True
            self.feasible = indep
        elif prob is Problem.DS:
            closed = [self.nbmask[p] | bits[p] for p in range(self.P)]
            full, P = self.full, self.P

            def dom(c):
                acc = 0
                for p in range(P):
                    if c & bits[p]:
                        acc |= closed[p]
                return acc == full
            self.feasible = dom
        elif prob is Problem.SP:
            a, b = inst.terminals
            da = bfs_distances(g, [a])
            if b not in da:
                self.feasible = lambda c: False
                return
            L = da[b]
            layers = [0] * (L + 1)
            for v, d in da.items():
                if d <= L:
                    layers[d] |= bits[v]
            ab = bits[a] | bits[b]
            nbm = self.nbmask

            def sp(c):
                if c & ab != ab or bin(c).count("1") != L + 1:
                    return False
                prev = None
                for lm in layers:
                    x = c & lm
                    if x == 0 or x & (x - 1):
                        return False
                    if prev is not None and not nbm[self.P - x.bit_length()] & prev:
                        return False
                    prev = x
                return True
            self.feasible = sp
        elif prob is Problem.VCUT:
            a, b = inst.terminals
            ba, bb = bits[a], bits[b]
            nbm, P = self.nbmask, self.P

            def cut(c):
                if c & (ba | bb):
                    return False
                seen = ba
                frontier = ba
                while frontier:
                    nxt = 0
                    f = frontier
                    while f:
                        low = f & -f
                        nxt |= nbm[P - low.bit_length()]
                        f ^= low
                    nxt &= ~(seen | c)
                    if nxt & bb:
                        return False
                    seen |= nxt
                    frontier = nxt
                return True
            self.feasible = cut
        else:  # pragma: no cover
            raise InvalidArgument(f"unknown problem {prob}")


def slide_successors(g: Graph, c: TokenConfiguration) -> set[TokenConfiguration]:
    """Every configuration one slide away from c."""
    if c.kind == "edge":
        members = c.members
        out = set()
        for e in members:
            for x in e:
                for w in g.adj[x]:
                    f = edge_id(x, w)
                    if f not in members:
                        out.add(TokenConfiguration("edge", (members - {e}) | {f}))
        return out
    members = c.members
    return {
        TokenConfiguration("vertex", (members - {v}) | {w})
        for v in members
        for w in g.adj[v]
        if w not in members
    }


def is_feasible(inst: DiscoveryInstance, c) -> bool:
    c = _as_config(inst.problem, c)
    space = _Space(inst)
    return space.feasible(space.encode(c))


def solve(inst: DiscoveryInstance, cap_states: int = DEFAULT_STATE_CAP) -> SolveResult:
    """Breadth-first search over configurations, at most `inst.budget` slides deep.

    The returned witness is the lexicographically least among the shortest
    ones, comparing configurations as sorted tuples position by position.
    """
    space = _Space(inst)
    start = space.encode(inst.start)
    feasible = space.feasible
    if feasible(start):
        return SolveResult(True, 0, DiscoverySequence((inst.start,)), 1)
    parent = {start: None}
    level = [start]
    for depth in range(1, inst.budget + 1):
        nxt = []
        for c in level:
            for s in space.successors(c):
                if s in parent:
                    continue
                parent[s] = c
                if feasible(s):
                    return _result(space, parent, s, depth, len(parent))
                nxt.append(s)
                if len(parent) > cap_states:
                    raise ResourceLimit("cap-states", cap_states)
        if not nxt:
            break
        level = nxt
    return SolveResult(False, None, None, len(parent))


def _result(space, parent, end, depth, explored):
    chain = []
    c = end
    while c is not None:
        chain.append(space.decode(c))
        c = parent[c]
    return SolveResult(True, depth, DiscoverySequence(tuple(reversed(chain))), explored)


def _slide_between(g: Graph, kind: str, a: frozenset, b: frozenset) -> bool:
    if len(a) != len(b):
        return False
    gone, came = a - b, b - a
    if len(gone) != 1 or len(came) != 1:
        return False
    (x,), (y,) = gone, came
    if kind == "edge":
        return len(set(x) & set(y)) == 1 and y in g.edges
    return g.has_edge(x, y)


def validate_sequence(inst: DiscoveryInstance, seq: DiscoverySequence | Sequence) -> Verdict:
    configs = seq.configs if isinstance(seq, DiscoverySequence) else tuple(seq)
    try:
        configs = [_as_config(inst.problem, c) for c in configs]
    except (InvalidArgument, TypeError, ValueError) as exc:
        return Verdict.failed("configuration", None, str(exc))
    if not configs:
        return Verdict.failed("empty", None, "empty sequence")
    if configs[0].members != inst.start.members:
        return Verdict.failed("start", 0, "first configuration differs from the start")
    if len(configs) - 1 > inst.budget:
        return Verdict.failed("budget", len(configs) - 1,
                              f"{len(configs) - 1} slides exceed budget {inst.budget}")
    g = inst.graph
    for i in range(1, len(configs)):
        prev, cur = configs[i - 1], configs[i]
        if inst.problem.edge_tokens:
            ok_ids = all(e in g.edges for e in cur.members)
        else:
            ok_ids = all(0 <= v < g.n for v in cur.members)
        if not ok_ids or not _slide_between(g, cur.kind, prev.members, cur.members):
            return Verdict.failed("slide", i, f"step {i} is not a legal slide")
    if not is_feasible(inst, configs[-1]):
        return Verdict.failed("final configuration", len(configs) - 1,
                              "final configuration is not a solution")
    return Verdict.passed()
