"""Command-line front end: `python -m discokit {solve,kernelize,gen,verify}`.

Exit codes: 0 yes/ok, 1 no/violation, 2 resource cap hit, 64 usage or
parse error, 65 builder precondition violated.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import formats
from .discovery import DEFAULT_STATE_CAP, DiscoverySequence, solve, validate_sequence
from .errors import InvalidArgument, ParseError, ResourceLimit
from .gadgets import BUILDERS, budget, witness_for
from .gadgets.formulas import WIDTH_MARGINS
from .gadgets.sources import DEFAULT_ORIENTATION_CAP, solve_mmo
from .kernels import kernelize_dsd, kernelize_isd, kernelize_matd, kernelize_vcd
from .pathdecomp import validate, width

EXIT_YES, EXIT_NO, EXIT_RESOURCE, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 64, 65

KERNELIZERS = {"vcd": kernelize_vcd, "isd": kernelize_isd, "dsd": kernelize_dsd, "matd": kernelize_matd}


def _source_reader(kind: str):
    if kind.startswith("fvs-"):
        return formats.read_mcc
    if kind == "spd-comp":
        return formats.read_hampath
    if kind == "vcut-comp":
        return formats.read_rainbow
    return formats.read_mmo


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    out: str | None = None
    cap_states: int = DEFAULT_STATE_CAP
    cap_orientations: int = DEFAULT_ORIENTATION_CAP
    seed: int = 0
    witness: str | None = None
    extra: dict = field(default_factory=dict)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap-states", type=_positive, default=DEFAULT_STATE_CAP)
    common.add_argument("--cap-orientations", type=_positive, default=DEFAULT_ORIENTATION_CAP)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None)
    p = _Parser(prog="discokit", description="Token-sliding solution discovery toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    s = sub.add_parser("solve", parents=[common], help="decide an instance exactly")
    s.add_argument("instance")
    k = sub.add_parser("kernelize", parents=[common], help="kernelize an instance")
    k.add_argument("problem", choices=sorted(KERNELIZERS))
    k.add_argument("instance")
    g = sub.add_parser("gen", parents=[common], help="build a hardness construction bundle")
    g.add_argument("kind", choices=sorted(BUILDERS))
    g.add_argument("sources", nargs="+")
    g.add_argument("--witness", default=None)
    v = sub.add_parser("verify", parents=[common], help="check a bundle, kernel or witness")
    v.add_argument("mode", choices=["pd", "equivalence", "witness", "audit"])
    v.add_argument("paths", nargs="+")
    return p


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(cfg: RunConfig, pairs) -> None:
    sys.stdout.write(formats.report([("command", cfg.command), ("seed", cfg.seed)] + list(pairs)))


def _write(cfg: RunConfig, name: str, body: str) -> str | None:
    if cfg.out is None:
        return None
    os.makedirs(cfg.out, exist_ok=True)
    path = os.path.join(cfg.out, name)
    with open(path, "w") as fh:
        fh.write(body)
    return path


def _load_instance(path: str):
    """An instance file, a kernel report, or a bundle directory."""
    if os.path.isdir(path):
        return formats.read_bundle(path).instance
    text = _read(path)
    if "\nmap\n" in text or text.startswith("map\n"):
        return formats.read_kernel_report(text).kernel
    return formats.read_instance(text)


def cmd_solve(cfg: RunConfig) -> int:
    inst = _load_instance(cfg.inputs[0])
    res = solve(inst, cfg.cap_states)
    pairs = [("problem", inst.problem.value), ("tokens", inst.k), ("budget", inst.budget),
             ("decision", "YES" if res.decision else "NO"),
             ("min_slides", res.min_slides if res.decision else "none"), ("explored", res.explored)]
    if res.witness is not None:
        path = _write(cfg, "witness.txt", formats.write_sequence(res.witness))
        if path:
            pairs.append(("witness_file", path))
    _emit(cfg, pairs)
    return EXIT_YES if res.decision else EXIT_NO


def cmd_kernelize(cfg: RunConfig) -> int:
    problem = cfg.extra["problem"]
    inst = _load_instance(cfg.inputs[0])
    try:
        rep = KERNELIZERS[problem](inst)
    except InvalidArgument as exc:
        raise UsageError(str(exc)) from None
    a = rep.audit
    verdict = _verdict(a.satisfied)
    pairs = [("problem", problem), ("rejected", "yes" if rep.rejected else "no"),
             ("vertices", a.vertices), ("edges", a.edges), ("budget", a.budget),
             ("audit", f"<= {a.bound_expr}: {verdict}" if a.bound is not None else f"unaudited: {a.note}")]
    if a.note:
        pairs.append(("note", a.note))
    path = _write(cfg, "kernel.txt", formats.write_kernel_report(rep))
    if path:
        pairs.append(("kernel_file", path))
    else:
        sys.stdout.write(formats.write_kernel_report(rep))
    _emit(cfg, pairs)
    return EXIT_YES


def _sources(kind: str, paths: list[str]):
    reader = _source_reader(kind)
    items = [reader(_read(p)) for p in paths]
    single = kind.endswith("-red") or kind.startswith("fvs")
    if single and len(items) != 1:
        raise UsageError(f"{kind} takes exactly one source file")
    return items[0] if single else items


def cmd_gen(cfg: RunConfig) -> int:
    kind = cfg.extra["kind"]
    src = _sources(kind, cfg.inputs)
    try:
        lc = BUILDERS[kind](src)
    except ParseError:
        raise
    except InvalidArgument as exc:
        _emit(cfg, [("kind", kind), ("error", f"precondition: {exc}")])
        return EXIT_PRECONDITION
    pairs = [("kind", kind), ("vertices", lc.graph.n), ("edges", lc.graph.m), ("tokens", lc.instance.k),
             ("budget", lc.instance.budget), ("budget_formula", lc.provenance.budget_formula),
             ("width", width(lc.pd)), ("width_bound", lc.provenance.width_bound or "none")]
    if _source_reader(kind) is formats.read_mmo:
        mmos = [src] if kind.endswith("-red") else src
        try:
            answers = [solve_mmo(m, cfg.cap_orientations) is not None for m in mmos]
            pairs.append(("source_decision", "yes" if any(answers) else "no"))
        except ResourceLimit as exc:
            pairs.append(("source_decision", f"unknown ({exc.cap})"))
    if cfg.out:
        formats.write_bundle(lc, cfg.out)
        pairs.append(("bundle", cfg.out))
    if cfg.witness:
        wit = formats.read_source_witness(_read(cfg.witness))
        try:
            seq = witness_for(lc, wit)
        except InvalidArgument as exc:
            _emit(cfg, pairs + [("error", f"precondition: {exc}")])
            return EXIT_PRECONDITION
        check = validate_sequence(lc.instance, seq)
        pairs += [("witness_slides", seq.slides), ("witness_valid", "yes" if check else f"no ({check.message})")]
        path = _write(cfg, "witness.txt", formats.write_sequence(seq))
        if path:
            pairs.append(("witness_file", path))
        if not check:
            _emit(cfg, pairs)
            return EXIT_NO
    _emit(cfg, pairs)
    return EXIT_YES


def _verify_pd(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    lc = formats.read_bundle(path)
    declared = formats.read_pd_declared_width(_read(os.path.join(path, formats.BUNDLE_FILES["pd"])))
    check = validate(lc.pd, lc.graph)
    pairs = [("pd_valid", "yes" if check else f"no (condition {check.condition}: {check.message})")]
    ok = bool(check)
    if check:
        w = width(lc.pd)
        bound = lc.provenance.width_bound
        pairs += [("width", w), ("declared_width", declared), ("width_bound", _none(bound))]
        ok = w == declared and (bound is None or w <= bound)
    _emit(cfg, pairs + [("result", "pass" if ok else "fail")])
    return EXIT_YES if ok else EXIT_NO


def _none(x):
    return "none" if x is None else x


def _verdict(ok: bool | None) -> str:
    return "none" if ok is None else ("pass" if ok else "fail")


def _verify_equivalence(cfg: RunConfig) -> int:
    if len(cfg.inputs) != 2:
        raise UsageError("equivalence takes two instance files")
    a, b = (_load_instance(p) for p in cfg.inputs)
    ra, rb = solve(a, cfg.cap_states), solve(b, cfg.cap_states)
    same = ra.decision == rb.decision
    _emit(cfg, [("first", "YES" if ra.decision else "NO"), ("second", "YES" if rb.decision else "NO"),
                ("result", "match" if same else "mismatch")])
    return EXIT_YES if same else EXIT_NO


def _verify_witness(cfg: RunConfig) -> int:
    if len(cfg.inputs) != 2:
        raise UsageError("witness takes an instance (or bundle) and a sequence file")
    inst = _load_instance(cfg.inputs[0])
    seq: DiscoverySequence = formats.read_sequence(_read(cfg.inputs[1]))
    check = validate_sequence(inst, seq)
    _emit(cfg, [("slides", seq.slides), ("budget", inst.budget),
                ("result", "pass" if check else f"fail (condition {check.condition}: {check.message})")])
    return EXIT_YES if check else EXIT_NO


def _verify_audit(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    if os.path.isdir(path):
        lc = formats.read_bundle(path)
        prov = lc.provenance
        want = budget(prov.source, prov.params)
        ok = want == lc.instance.budget
        pairs = [("kind", prov.source), ("budget", lc.instance.budget), ("formula", prov.budget_formula),
                 ("recomputed", want)]
        if prov.source in WIDTH_MARGINS or prov.width_bound is not None:
            w = width(lc.pd)
            pairs.append(("width", w))
            ok = ok and (prov.width_bound is None or w <= prov.width_bound)
    else:
        rep = formats.read_kernel_report(_read(path))
        g, a = rep.kernel.graph, rep.audit
        counts = (g.n, g.m, rep.kernel.budget) == (a.vertices, a.edges, a.budget)
        measure = g.m if a.measure == "edges" else g.n
        holds = None if a.bound is None else measure <= a.bound
        ok = counts and holds == a.satisfied
        pairs = [("vertices", g.n), ("edges", g.m), ("budget", rep.kernel.budget),
                 ("bound", _none(a.bound)), ("bound_satisfied", _verdict(holds))]
    _emit(cfg, pairs + [("result", "pass" if ok else "fail")])
    return EXIT_YES if ok else EXIT_NO


def cmd_verify(cfg: RunConfig) -> int:
    return {"pd": _verify_pd, "equivalence": _verify_equivalence, "witness": _verify_witness,
            "audit": _verify_audit}[cfg.extra["mode"]](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    cfg = None
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            raise UsageError("missing command")
        inputs = {"solve": lambda: [ns.instance], "kernelize": lambda: [ns.instance],
                  "gen": lambda: ns.sources, "verify": lambda: ns.paths}[ns.command]()
        extra = {k: getattr(ns, k) for k in ("problem", "kind", "mode") if hasattr(ns, k)}
        cfg = RunConfig(ns.command, inputs, ns.out, ns.cap_states, ns.cap_orientations, ns.seed,
                        getattr(ns, "witness", None), extra)
        handler = {"solve": cmd_solve, "kernelize": cmd_kernelize, "gen": cmd_gen, "verify": cmd_verify}
        return handler[ns.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimit as exc:
        head = [] if cfg is None else [("command", cfg.command), ("seed", cfg.seed)]
        sys.stdout.write(formats.report(head + [("result", "resource limit"), ("cap", exc.cap),
                                                ("limit", exc.limit)]))
        return EXIT_RESOURCE
    except InvalidArgument as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
