"""The ``gon`` command line front end.

Exit codes: 0 verdict true or success, 1 verdict false, 2 usage or input
error, 3 unknown (budget exhausted).  Reports are a headline followed by
key=value lines; ``--json`` prints the same content as one object.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .amalgam import AmalgamError, AmalgamSpec, canonical_amalgam
from .completion import CompletionError, complete
from .gonfile import GonParseError, parse_map, parse_vertex_set, read_gon, to_dot, write_gon
from .graph import GraphError, Verdict, isomorphic
from .normalize import NormalizeError, classify_free, free_gon, gamma_k, normalize_to_hatrack, verify_certificate
from .polygon import (
    check_nondegenerate, check_partial, check_thick, check_weak, cl_closure, clean_arcs, is_closed_over, is_open,
    is_open_over,
)
from .rank import PreconditionError, delta, is_n_strong

OK, FALSE, USAGE, UNKNOWN = 0, 1, 2, 3
DEFAULT_BUDGET = 10**6
DEFAULT_STAGES = 3
DEFAULT_CAP = 12


class UsageError(Exception):
    pass


class Report:
    def __init__(self, command: str):
        self.command = command
        self.headline = ""
        self.fields = {}
        self.code = OK

    def set(self, key, value):
        self.fields[key] = value
        return self

    def render(self, as_json: bool) -> str:
        if as_json:
            obj = {"command": self.command, "headline": self.headline, "exit": self.code}
            obj.update({k: _jsonable(v) for k, v in self.fields.items()})
            return json.dumps(obj, sort_keys=False, ensure_ascii=False)
        lines = [self.headline] if self.headline else []
        lines += [f"{k}={_text(v)}" for k, v in self.fields.items()]
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, (set, frozenset)):
        return sorted(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items())}
    return v


def _text(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (set, frozenset)):
        return " ".join(sorted(v))
    if isinstance(v, (list, tuple)):
        return " ".join(_text(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}:{_text(x)}" for k, x in sorted(v.items()))
    return str(v)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


# ---------------------------------------------------------------------------
# input helpers

def _graph(path, args):
    g = read_gon(path)
    if args.n is not None and args.n != g.n:
        print(f"warning: {path} declares n={g.n}; using --n {args.n}", file=sys.stderr)
        g = g.with_n(args.n)
    return g


def _set(path, g=None) -> frozenset:
    vs = parse_vertex_set(Path(path).read_text(encoding="utf-8"))
    if g is not None:
        missing = sorted(v for v in vs if v not in g)
        if missing:
            raise UsageError(f"{path}: unknown vertices {' '.join(missing)}")
    return vs


def _map(path) -> dict:
    return parse_map(Path(path).read_text(encoding="utf-8"))


def _dot(args, g):
    if args.dot:
        Path(args.dot).write_text(to_dot(g), encoding="utf-8")


# ---------------------------------------------------------------------------
# commands

def cmd_check(args, r: Report):
    g = _graph(args.file, args)
    _dot(args, g)
    n = g.n
    if args.kind == "nondegenerate":
        res = check_nondegenerate(g, args.budget)
        r.set("budget", args.budget)
        if res.verdict is Verdict.UNKNOWN:
            r.headline = f"nondegenerate partial {n}-gon: unknown"
            r.code = UNKNOWN
            return
        r.headline = f"nondegenerate partial {n}-gon: {_yn(res.verdict is Verdict.YES)}"
        if res.verdict is Verdict.YES:
            r.set("witness_kind", res.kind).set("witness", list(res.witness))
        else:
            r.code = FALSE
        return
    check = {"partial": check_partial, "weak": check_weak, "thick": check_thick}[args.kind]
    rep = check(g)
    label = {"partial": f"partial {n}-gon", "weak": f"weak generalized {n}-gon",
             "thick": "thick (every valency at least 3)"}[args.kind]
    r.headline = f"{label}: {_yn(rep.verdict)}"
    if not rep.verdict:
        r.code = FALSE
        for i, (what, wit) in enumerate(rep.failures[:20]):
            r.set(f"failure{i}", f"{what} {_text(wit)}")


def cmd_delta(args, r: Report):
    g = _graph(args.file, args)
    _dot(args, g)
    r.headline = f"delta={delta(g)}"
    r.set("n", g.n).set("vertices", len(g)).set("edges", g.num_edges)


def cmd_strong(args, r: Report):
    sub = _graph(args.sub, args)
    g = _graph(args.whole, args)
    base = frozenset(sub.vertices)
    if not base <= frozenset(g.vertices) or set(g.induced(base).edges) != set(sub.edges):
        raise UsageError("SUB is not an induced subgraph of WHOLE")
    rep = is_n_strong(base, g)
    r.headline = f"strong: {_yn(rep.strong)}"
    r.set("relative_delta", rep.delta).set("method", rep.method)
    if not rep.strong:
        r.code = FALSE
        r.set("witness", rep.witness).set("witness_value", rep.witness_value)


def cmd_complete(args, r: Report):
    g = _graph(args.file, args)
    trace = complete(g, args.stages)
    if args.out:
        trace.write(args.out)
    _dot(args, trace.last)
    r.headline = f"completed {trace.stages} stages"
    r.set("stages", args.stages).set("complete", trace.complete)
    r.set("vertices", [len(s) for s in trace.snapshots]).set("edges", [s.num_edges for s in trace.snapshots])
    r.set("delta", [delta(s) for s in trace.snapshots])
    r.set("arcs", [len(a) for a in trace.arcs])


def cmd_open(args, r: Report):
    g = _graph(args.file, args)
    _dot(args, g)
    if args.over:
        A = _set(args.over, g)
        res = is_open_over(frozenset(g.vertices) - A, A, g)
        r.headline = f"open over {len(A)} vertices: {_yn(res.open)}"
    else:
        res = is_open(g)
        r.headline = f"open: {_yn(res.open)}"
    if res.open:
        r.set("steps", len(res.certificate.steps))
        if args.cert:
            Path(args.cert).write_text(res.certificate.to_text(), encoding="utf-8")
            r.set("certificate", args.cert)
    else:
        r.code = FALSE
        r.set("stuck_size", len(res.stuck)).set("stuck", res.stuck)


def cmd_closed(args, r: Report):
    g = _graph(args.file, args)
    A = _set(args.a, g)
    if args.b is None:
        res = cl_closure(A, g, args.cap)
        r.headline = f"bounded closure: {len(res.vertices)} vertices"
        r.set("cap", args.cap).set("rounds", res.rounds_used).set("converged", res.converged)
        r.set("closure", res.vertices)
        if not res.converged:
            r.code = UNKNOWN
        return
    B = _set(args.b, g) - A
    ok = is_closed_over(B, A, g)
    r.headline = f"closed over A: {_yn(ok)}"
    if not ok:
        r.code = FALSE
        H = g.induced(A | B)
        loose = sorted(v for v in B if H.degree(v) <= 1)
        if loose:
            r.set("loose_end", loose[0])
        else:
            a, inner, b = next(arc for arc in clean_arcs(H) if B.issuperset(arc[1]))
            r.set("clean_arc", [a, *inner, b])


def cmd_amalgam(args, r: Report):
    A = _graph(args.over, args)
    B = _graph(args.b, args)
    C = _graph(args.c, args)
    spec = AmalgamSpec(A, B, C, _map(args.map_b), _map(args.map_c))
    try:
        res = canonical_amalgam(spec, args.stages, args.budget)
    except AmalgamError as e:
        if e.code in ("GONALITY_MISMATCH", "NOT_EMBEDDING"):
            raise UsageError(str(e))
        r.headline = f"amalgam: {e.code}"
        r.set("reason", str(e))
        r.code = FALSE
        return
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        write_gon(res.graph, d / "amalgam.gon")
        res.trace.write(d / "trace")
    _dot(args, res.graph)
    r.headline = f"amalgam: {len(res.graph)} vertices, {res.graph.num_edges} edges"
    r.set("stages", args.stages).set("budget", args.budget).set("delta", delta(res.graph))
    for k, v in res.flags.items():
        r.set(k, v)
    r.set("trace_vertices", [len(s) for s in res.trace.snapshots])


def cmd_normalize(args, r: Report):
    g = _graph(args.file, args)
    try:
        hr, cert = normalize_to_hatrack(g, budget=args.budget)
    except NormalizeError as e:
        r.headline = f"normalize: {e.code}"
        r.code = FALSE
        if e.code == "NOT_OPEN":
            r.set("stuck", is_open(g).stuck)
        r.set("reason", str(e))
        return
    check = verify_certificate(cert, g)
    if args.cert:
        Path(args.cert).write_text(cert.to_text(), encoding="utf-8")
        r.set("certificate", args.cert)
    _dot(args, hr.to_graph())
    r.headline = f"hat-rack {hr}"
    r.set("delta", delta(g)).set("steps", len(cert.steps)).set("kinds", cert.kinds())
    r.set("certificate_ok", check.ok)
    if not check.ok:
        r.code = FALSE


def cmd_classify(args, r: Report):
    g = _graph(args.file, args)
    try:
        c = classify_free(g, args.budget)
    except NormalizeError as e:
        r.headline = f"classify: {e.code}"
        r.set("reason", str(e))
        r.code = FALSE
        return
    r.headline = c.statement
    r.set("k", c.k).set("delta", c.delta)
    if c.diagnostic:
        r.code = FALSE


def cmd_iso(args, r: Report):
    g1 = _graph(args.g1, args)
    g2 = _graph(args.g2, args)
    m = isomorphic(g1, g2) if g1.n == g2.n else None
    r.headline = f"isomorphic: {_yn(m is not None)}"
    if m is None:
        r.code = FALSE
        r.set("vertices", [len(g1), len(g2)]).set("edges", [g1.num_edges, g2.num_edges])
    else:
        r.set("map", m)


def cmd_example(args, r: Report):
    from .gallery import acl_dcl_witness, ladder_prefix
    from .generators import fano

    out = Path(args.out or ".")
    name = args.name
    need = {"gamma-k": ("n", "k"), "free-gon": ("n", "k"), "acl-dcl": ("n",), "ladder": ("n",), "fano": ()}[name]
    for p in need:
        if getattr(args, p) is None:
            raise UsageError(f"example {name} needs --{p}")
    out.mkdir(parents=True, exist_ok=True)
    if name in ("gamma-k", "free-gon") and args.k < 1:
        raise UsageError("--k must be positive")
    if name == "gamma-k":
        g = gamma_k(args.n, args.k)
        write_gon(g, out / f"gamma{args.k}.gon")
        r.headline = f"gamma_{args.k} for n={args.n}: delta={delta(g)}"
        r.set("file", str(out / f"gamma{args.k}.gon"))
    elif name == "free-gon":
        try:
            trace = free_gon(args.n, args.k, args.stages)
        except NormalizeError as e:
            raise UsageError(str(e))
        trace.write(out)
        ds = [delta(s) for s in trace.snapshots]
        r.headline = f"free {args.n}-gon on gamma_{args.k}: {trace.stages} stages"
        r.set("stages", args.stages).set("vertices", [len(s) for s in trace.snapshots]).set("delta", ds)
        r.set("delta_constant", len(set(ds)) == 1).set("dir", str(out))
    elif name == "fano":
        g = fano()
        write_gon(g, out / "fano.gon")
        r.headline = f"fano plane: delta={delta(g)}"
        r.set("file", str(out / "fano.gon"))
    else:
        if args.n < 3:
            raise UsageError("--n must be at least 3")
        b = acl_dcl_witness(args.n) if name == "acl-dcl" else ladder_prefix(args.n, args.rungs)
        b.write(out)
        r.headline = f"{name} bundle for n={args.n}: {'all assertions pass' if b.ok else 'assertion failure'}"
        r.set("vertices", len(b.graph)).set("edges", b.graph.num_edges)
        for k, v in b.assertions:
            r.set(k, v)
        r.set("dir", str(out))
        if not b.ok:
            r.code = FALSE


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    env = os.environ.get("GON_BUDGET")
    default_budget = int(env) if env and env.isdigit() else DEFAULT_BUDGET
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object instead of text")
    common.add_argument("--budget", type=int, default=default_budget, help="search budget (env GON_BUDGET)")
    common.add_argument("--stages", type=int, default=DEFAULT_STAGES, help="completion stages")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="size cap for closed-set search")
    common.add_argument("--n", type=int, default=None, help="override n from the GON header")
    common.add_argument("--dot", default=None, help="also write the main graph as DOT to this file")

    p = argparse.ArgumentParser(prog="gon", description="Workbench for generalized n-gons.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="polygon axiom checks")
    s.add_argument("kind", choices=["partial", "weak", "thick", "nondegenerate"])
    s.add_argument("file")
    s = sub.add_parser("delta", parents=[common], help="predimension delta_n")
    s.add_argument("file")
    s = sub.add_parser("strong", parents=[common], help="is SUB strongly embedded in WHOLE")
    s.add_argument("sub")
    s.add_argument("whole")
    s = sub.add_parser("complete", parents=[common], help="truncated free completion")
    s.add_argument("file")
    s.add_argument("-o", "--out", default=None)
    s = sub.add_parser("open", parents=[common], help="openness, optionally over a vertex set")
    s.add_argument("file")
    s.add_argument("--over", default=None)
    s.add_argument("--cert", default=None)
    s = sub.add_parser("closed", parents=[common], help="is B closed over A")
    s.add_argument("file")
    s.add_argument("--a", required=True)
    s.add_argument("--b", default=None)
    s = sub.add_parser("amalgam", parents=[common], help="canonical amalgam of B and C over A")
    s.add_argument("b")
    s.add_argument("c")
    s.add_argument("--over", required=True)
    s.add_argument("--map-b", required=True)
    s.add_argument("--map-c", required=True)
    s.add_argument("-o", "--out", default=None)
    s = sub.add_parser("normalize", parents=[common], help="certified hat-rack normal form")
    s.add_argument("file")
    s.add_argument("--cert", default=None)
    s = sub.add_parser("classify", parents=[common], help="which free n-gon a generator yields")
    s.add_argument("file")
    s = sub.add_parser("iso", parents=[common], help="part-preserving isomorphism")
    s.add_argument("g1")
    s.add_argument("g2")
    s = sub.add_parser("example", parents=[common], help="write a gallery construction")
    s.add_argument("name", choices=["gamma-k", "free-gon", "acl-dcl", "ladder", "fano"])
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--rungs", type=int, default=2)
    s.add_argument("-o", "--out", default=None)
    return p


COMMANDS = {
    "check": cmd_check, "delta": cmd_delta, "strong": cmd_strong, "complete": cmd_complete, "open": cmd_open,
    "closed": cmd_closed, "amalgam": cmd_amalgam, "normalize": cmd_normalize, "classify": cmd_classify,
    "iso": cmd_iso, "example": cmd_example,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    if args.budget <= 0 or args.stages < 0 or args.cap <= 0:
        print("error: budget and cap must be positive, stages non-negative", file=sys.stderr)
        return USAGE
    r = Report(args.command)
    try:
        COMMANDS[args.command](args, r)
    except (UsageError, GonParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except (CompletionError, PreconditionError, GraphError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    print(r.render(args.json), file=out)
    return r.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
