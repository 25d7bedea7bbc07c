"""Line-oriented text formats: every writer here has a reader that inverts it."""
from __future__ import annotations

import os
from typing import Iterable, Iterator

from .discovery import DiscoveryInstance, DiscoverySequence, Problem, TokenConfiguration
from .errors import InvalidArgument, ParseError
from .graph import Graph, edge_id
from .gadgets.forge import LabeledConstruction, Provenance
from .gadgets.sources import HamPathInstance, MCCInstance, MMOInstance, Orientation, RainbowInstance
from .kernels.report import KernelAudit, KernelReport
from .pathdecomp import PathDecomposition

HEADER = "# disco-kit v1"

BUNDLE_FILES = {
    "graph": "graph.txt",
    "pd": "decomposition.txt",
    "instance": "instance.txt",
    "labels": "labels.txt",
    "provenance": "provenance.txt",
}


class _Lines:
    """Cursor over the meaningful lines of a text, keeping 1-based line numbers."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), 1):
            s = raw.strip()
            if not s or s.startswith("#") or s == "c" or s.startswith("c "):
                continue
            self.items.append((no, raw.rstrip("\n")))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, what: str):
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise ParseError(f"unexpected end of input, expected {what}", last + 1)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self) -> bool:
        return self.pos >= len(self.items)

    def expect_end(self):
        if not self.done():
            no, raw = self.peek()
            raise ParseError(f"unexpected content {raw.split()[0]!r}", no)


def _fields(no: int, raw: str, key: str, count: int | None = None) -> list[str]:
    parts = raw.split()
    if parts[0] != key:
        raise ParseError(f"expected '{key}', found {parts[0]!r}", no, raw.find(parts[0]) + 1)
    if count is not None and len(parts) - 1 != count:
        raise ParseError(f"'{key}' takes {count} values, got {len(parts) - 1}", no)
    return parts[1:]


def _int(no: int, raw: str, tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, found {tok!r}", no, raw.find(tok) + 1) from None


def _pair(no: int, raw: str, tok: str) -> tuple[int, int]:
    a, sep, b = tok.partition("-")
    if not sep:
        raise ParseError(f"expected an edge 'u-v', found {tok!r}", no, raw.find(tok) + 1)
    return _int(no, raw, a), _int(no, raw, b)


# -- graphs -----------------------------------------------------------------

def graph_lines(g: Graph) -> list[str]:
    return [f"p {g.n} {g.m}"] + [f"e {u} {v}" for u, v in g.edge_list]


def _read_graph(cur: _Lines) -> Graph:
    no, raw = cur.next("graph header 'p <n> <m>'")
    n, m = (_int(no, raw, t) for t in _fields(no, raw, "p", 2))
    edges = []
    for _ in range(m):
        no, raw = cur.next("edge line 'e <u> <v>'")
        u, v = (_int(no, raw, t) for t in _fields(no, raw, "e", 2))
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad edge {u}-{v} for {n} vertices", no)
        edges.append((u, v))
    g = Graph(n, edges)
    if g.m != m:
        raise ParseError(f"header promises {m} edges but {g.m} are distinct", no)
    return g


def write_graph(g: Graph) -> str:
    return "\n".join(graph_lines(g)) + "\n"


def read_graph(text: str) -> Graph:
    cur = _Lines(text)
    g = _read_graph(cur)
    cur.expect_end()
    return g


# -- path decompositions ------------------------------------------------------

def pd_lines(pd: PathDecomposition) -> list[str]:
    w = max((len(b) for b in pd.bags), default=0) - 1
    return [f"pd {len(pd.bags)} {w}"] + [" ".join(["b"] + [str(v) for v in sorted(b)]) for b in pd.bags]


def _read_pd(cur: _Lines) -> PathDecomposition:
    no, raw = cur.next("decomposition header 'pd <bags> <width>'")
    count, _declared = (_int(no, raw, t) for t in _fields(no, raw, "pd", 2))
    bags = []
    for _ in range(count):
        no, raw = cur.next("bag line 'b <ids>'")
        bags.append(frozenset(_int(no, raw, t) for t in _fields(no, raw, "b")))
    return PathDecomposition(bags)


def read_pd_declared_width(text: str) -> int:
    cur = _Lines(text)
    no, raw = cur.next("decomposition header")
    return _int(no, raw, _fields(no, raw, "pd", 2)[1])


def write_pd(pd: PathDecomposition) -> str:
    return "\n".join(pd_lines(pd)) + "\n"


def read_pd(text: str) -> PathDecomposition:
    cur = _Lines(text)
    pd = _read_pd(cur)
    cur.expect_end()
    return pd


# -- discovery instances --------------------------------------------------------

def _token_str(x) -> str:
    return f"{x[0]}-{x[1]}" if isinstance(x, tuple) else str(x)


def instance_lines(inst: DiscoveryInstance) -> list[str]:
    out = graph_lines(inst.graph)
    out.append(f"problem {inst.problem.value}")
    out.append(" ".join(["tokens"] + [_token_str(x) for x in inst.start]))
    out.append(f"budget {inst.budget}")
    if inst.terminals is not None:
        out.append(f"terminals {inst.terminals[0]} {inst.terminals[1]}")
    return out


def _read_instance(cur: _Lines) -> DiscoveryInstance:
    g = _read_graph(cur)
    no, raw = cur.next("'problem <name>'")
    (name,) = _fields(no, raw, "problem", 1)
    try:
        problem = Problem(name.upper())
    except ValueError:
        raise ParseError(f"unknown problem {name!r}", no, raw.find(name) + 1) from None
    no, raw = cur.next("'tokens ...'")
    toks = _fields(no, raw, "tokens")
    start = [_pair(no, raw, t) for t in toks] if problem.edge_tokens else [_int(no, raw, t) for t in toks]
    if len(set(start)) != len(start):
        raise ParseError("duplicate token", no)
    no, raw = cur.next("'budget <b>'")
    budget = _int(no, raw, _fields(no, raw, "budget", 1)[0])
    terminals = None
    nxt = cur.peek()
    if nxt is not None and nxt[1].split()[0] == "terminals":
        no, raw = cur.next("terminals")
        a, b = (_int(no, raw, t) for t in _fields(no, raw, "terminals", 2))
        terminals = (a, b)
    try:
        return DiscoveryInstance(problem, g, start, budget, terminals)
    except InvalidArgument as exc:
        raise ParseError(str(exc), no) from None


def write_instance(inst: DiscoveryInstance) -> str:
    return "\n".join(instance_lines(inst)) + "\n"


def read_instance(text: str) -> DiscoveryInstance:
    cur = _Lines(text)
    inst = _read_instance(cur)
    cur.expect_end()
    return inst


# -- discovery sequences --------------------------------------------------------

def write_sequence(seq: DiscoverySequence) -> str:
    kind = seq.configs[0].kind if seq.configs else "vertex"
    out = [f"sequence {kind} {len(seq.configs)}"]
    out += [" ".join(["config"] + [_token_str(x) for x in c]) for c in seq.configs]
    return "\n".join(out) + "\n"


def read_sequence(text: str) -> DiscoverySequence:
    cur = _Lines(text)
    no, raw = cur.next("'sequence <kind> <count>'")
    kind, count = _fields(no, raw, "sequence", 2)
    if kind not in ("vertex", "edge"):
        raise ParseError(f"unknown token kind {kind!r}", no)
    configs = []
    for _ in range(_int(no, raw, count)):
        no, raw = cur.next("'config ...'")
        toks = _fields(no, raw, "config")
        if kind == "edge":
            configs.append(TokenConfiguration.edges(_pair(no, raw, t) for t in toks))
        else:
            configs.append(TokenConfiguration.vertices(_int(no, raw, t) for t in toks))
    cur.expect_end()
    return DiscoverySequence(tuple(configs))


# -- source instances -----------------------------------------------------------

def write_mmo(mmo: MMOInstance) -> str:
    out = graph_lines(mmo.h)
    out += [f"w {u} {v} {s}" for (u, v), s in mmo.sigma.items()]
    out.append(f"r {mmo.r}")
    out += pd_lines(mmo.pd)
    return "\n".join(out) + "\n"


def read_mmo(text: str) -> MMOInstance:
    cur = _Lines(text)
    h = _read_graph(cur)
    sigma = {}
    for _ in range(h.m):
        no, raw = cur.next("weight line 'w <u> <v> <sigma>'")
        u, v, s = (_int(no, raw, t) for t in _fields(no, raw, "w", 3))
        if u == v:
            raise ParseError("weight on a self-loop", no)
        sigma[edge_id(u, v)] = s
    no, raw = cur.next("'r <value>'")
    r = _int(no, raw, _fields(no, raw, "r", 1)[0])
    pd = _read_pd(cur)
    cur.expect_end()
    try:
        return MMOInstance(h, pd, sigma, r)
    except InvalidArgument as exc:
        raise ParseError(str(exc), no) from None


def write_mcc(mcc: MCCInstance) -> str:
    out = graph_lines(mcc.graph) + [" ".join(["class"] + [str(v) for v in c]) for c in mcc.classes]
    return "\n".join(out) + "\n"


def read_mcc(text: str) -> MCCInstance:
    cur = _Lines(text)
    g = _read_graph(cur)
    classes = []
    while not cur.done():
        no, raw = cur.next("'class ...'")
        classes.append(tuple(_int(no, raw, t) for t in _fields(no, raw, "class")))
    try:
        return MCCInstance(g, tuple(classes))
    except InvalidArgument as exc:
        raise ParseError(str(exc), cur.items[-1][0] if cur.items else 1) from None


def write_hampath(inst: HamPathInstance) -> str:
    return write_graph(inst.graph)


def read_hampath(text: str) -> HamPathInstance:
    return HamPathInstance(read_graph(text))


def write_rainbow(inst: RainbowInstance) -> str:
    out = graph_lines(inst.graph) + [f"colour {u} {v} {c}" for (u, v), c in inst.colour.items()]
    out.append(f"kappa {inst.kappa}")
    return "\n".join(out) + "\n"


def read_rainbow(text: str) -> RainbowInstance:
    cur = _Lines(text)
    g = _read_graph(cur)
    colour = {}
    for _ in range(g.m):
        no, raw = cur.next("'colour <u> <v> <c>'")
        u, v, c = (_int(no, raw, t) for t in _fields(no, raw, "colour", 3))
        colour[(u, v)] = c
    no, raw = cur.next("'kappa <k>'")
    kappa = _int(no, raw, _fields(no, raw, "kappa", 1)[0])
    cur.expect_end()
    try:
        return RainbowInstance(g, colour, kappa)
    except InvalidArgument as exc:
        raise ParseError(str(exc), no) from None


def read_source_witness(text: str):
    """Parse a certificate for a source instance.

    Lines: optional `instance <j>`, then either `arc <tail> <head>` lines
    (an orientation), `clique <ids>`, `path <ids>` or `matching <u-v ...>`.
    """
    cur = _Lines(text)
    j = None
    arcs = {}
    body = None
    while not cur.done():
        no, raw = cur.next("witness line")
        key = raw.split()[0]
        if key == "instance":
            j = _int(no, raw, _fields(no, raw, "instance", 1)[0])
        elif key == "arc":
            t, h = (_int(no, raw, x) for x in _fields(no, raw, "arc", 2))
            arcs[edge_id(t, h)] = (t, h)
        elif key in ("clique", "path"):
            body = tuple(_int(no, raw, x) for x in _fields(no, raw, key))
        elif key == "matching":
            body = tuple(_pair(no, raw, x) for x in _fields(no, raw, key))
        else:
            raise ParseError(f"unknown witness line {key!r}", no)
    if arcs:
        body = Orientation(arcs)
    if body is None:
        raise ParseError("witness file names no certificate", 1)
    return body if j is None else (j, body)


def write_source_witness(body, j: int | None = None) -> str:
    out = [] if j is None else [f"instance {j}"]
    if isinstance(body, Orientation):
        out += [f"arc {t} {h}" for t, h in (body.direction[e] for e in sorted(body.direction))]
    elif body and isinstance(body[0], tuple):
        out.append(" ".join(["matching"] + [_token_str(e) for e in body]))
    else:
        out.append(" ".join(["path"] + [str(v) for v in body]))
    return "\n".join(out) + "\n"


# -- construction bundles ---------------------------------------------------------

def write_labels(names) -> str:
    return "".join(f"{v} {names[v]}\n" for v in sorted(names))


def read_labels(text: str) -> dict[int, str]:
    out = {}
    for no, raw in _Lines(text).items:
        head, _, label = raw.strip().partition(" ")
        if not label:
            raise ParseError("expected '<id> <symbol>'", no)
        out[_int(no, raw, head)] = label.strip()
    return out


def _value(x) -> str:
    return "none" if x is None else str(x)


def write_provenance(p: Provenance, budget: int | None = None) -> str:
    out = [HEADER, f"source: {p.source}", f"budget_formula: {p.budget_formula}"]
    if budget is not None:
        out.append(f"budget: {budget}")
    out.append("params: " + " ".join(f"{k}={v}" for k, v in sorted(p.params.items())))
    out.append(f"width_bound: {_value(p.width_bound)}")
    out.append(f"width_formula: {p.width_formula}")
    out += [f"note: {n}" for n in p.notes]
    return "\n".join(out) + "\n"


def read_report(text: str) -> dict[str, list[str]]:
    """Parse `key: value` lines; repeated keys accumulate in order."""
    out: dict[str, list[str]] = {}
    for no, raw in _Lines(text).items:
        key, sep, val = raw.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", no)
        out.setdefault(key.strip(), []).append(val.strip())
    return out


def read_provenance(text: str) -> Provenance:
    kv = read_report(text)

    def one(key, default=""):
        return kv.get(key, [default])[0]

    params = {}
    for item in one("params").split():
        k, _, v = item.partition("=")
        params[k] = int(v)
    wb = one("width_bound", "none")
    return Provenance(one("source"), one("budget_formula"), params,
                      None if wb == "none" else int(wb), one("width_formula"), tuple(kv.get("note", [])))


def write_bundle(lc: LabeledConstruction, out_dir: str) -> dict[str, str]:
    os.makedirs(out_dir, exist_ok=True)
    files = {
        "graph": write_graph(lc.graph),
        "pd": write_pd(lc.pd),
        "instance": write_instance(lc.instance),
        "labels": write_labels(lc.names),
        "provenance": write_provenance(lc.provenance, lc.instance.budget),
    }
    paths = {}
    for key, body in files.items():
        path = os.path.join(out_dir, BUNDLE_FILES[key])
        with open(path, "w") as fh:
            fh.write(body)
        paths[key] = path
    return paths


def read_bundle(in_dir: str) -> LabeledConstruction:
    def load(key):
        with open(os.path.join(in_dir, BUNDLE_FILES[key])) as fh:
            return fh.read()

    g = read_graph(load("graph"))
    inst = read_instance(load("instance"))
    if inst.graph != g:
        raise InvalidArgument("bundle graph and instance graph differ")
    prov = read_provenance(load("provenance"))
    return LabeledConstruction(g, read_pd(load("pd")), read_labels(load("labels")), inst, prov,
                               {"kind": prov.source})


# -- kernel reports -----------------------------------------------------------------

def write_kernel_report(rep: KernelReport) -> str:
    a = rep.audit
    out = instance_lines(rep.kernel)
    out.append("map")
    out += [f"{v} -> {w}" for v, w in sorted(rep.vertex_map.items())]
    out.append("end")
    out.append("audit")
    out += [f"vertices: {a.vertices}", f"edges: {a.edges}", f"budget: {a.budget}",
            f"bound: {_value(a.bound)}", f"bound_expr: {a.bound_expr}", f"measure: {a.measure}",
            f"bound_satisfied: {'none' if a.satisfied is None else ('pass' if a.satisfied else 'fail')}",
            f"rejected: {'yes' if rep.rejected else 'no'}"]
    if a.note:
        out.append(f"note: {a.note}")
    out += [f"detail: {k}={('yes' if v else 'no') if isinstance(v, bool) else _value(v)}"
            for k, v in sorted(a.details.items())]
    out.append("end")
    return "\n".join(out) + "\n"


def _detail(no: int, text: str) -> tuple[str, object]:
    key, sep, val = text.partition("=")
    if not sep:
        raise ParseError("expected 'detail: key=value'", no)
    if val in ("yes", "no"):
        return key, val == "yes"
    try:
        return key, int(val)
    except ValueError:
        return key, val


def read_kernel_report(text: str) -> KernelReport:
    cur = _Lines(text)
    inst = _read_instance(cur)
    no, raw = cur.next("'map'")
    _fields(no, raw, "map", 0)
    vmap = {}
    while True:
        no, raw = cur.next("map line or 'end'")
        if raw.strip() == "end":
            break
        left, sep, right = raw.partition("->")
        if not sep:
            raise ParseError("expected '<orig> -> <kernel>'", no)
        vmap[_int(no, raw, left.strip())] = _int(no, raw, right.strip())
    no, raw = cur.next("'audit'")
    _fields(no, raw, "audit", 0)
    kv, details = {}, {}
    while True:
        no, raw = cur.next("audit line or 'end'")
        if raw.strip() == "end":
            break
        key, sep, val = raw.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", no)
        if key.strip() == "detail":
            k, v = _detail(no, val.strip())
            details[k] = v
        else:
            kv[key.strip()] = val.strip()
    cur.expect_end()
    try:
        bound = None if kv["bound"] == "none" else int(kv["bound"])
        sat = {"none": None, "pass": True, "fail": False}[kv["bound_satisfied"]]
        audit = KernelAudit(int(kv["vertices"]), int(kv["edges"]), int(kv["budget"]), bound,
                            kv.get("bound_expr", ""), sat, kv.get("note", ""), kv.get("measure", "vertices"), details)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"incomplete audit block ({exc})", no) from None
    return KernelReport(inst, vmap, audit, kv.get("rejected") == "yes")


def report(pairs: Iterable[tuple[str, object]]) -> str:
    """A `# disco-kit v1` report with one `key: value` line per pair."""
    return "\n".join([HEADER] + [f"{k}: {v}" for k, v in pairs]) + "\n"
