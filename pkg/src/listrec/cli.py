"""Command-line interface: ``listrec <command> ...`` or ``python -m listrec``.

Exit status is 0 on success, 1 on usage or precondition errors and 2 when
a search or enumeration cap would be exceeded. Coordinates on the command
line and in outputs are 1-indexed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import __version__
from ._util import as_fraction, fraction_str
from .adversarial import (
    gr06_build,
    gr06_report,
    random_sumset_points,
    sumset_build,
    sumset_verify,
)
from .code import ExplicitCode, PunctureMap, as_generator, puncture, random_puncture, rs_encode
from .errors import CapExceeded, ListRecError
from .expander import code_graph, expansion_exhaustive, expansion_sampled, zero_error_bridge
from .experiments import run_experiment
from .formats import dumps_code, dumps_edges, load_code, load_config, load_lists, parse_field
from .listrecovery import recover
from .theorem import check_main_theorem, check_simple_theorem, johnson_decoding, johnson_recovery


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common(suppress: bool) -> argparse.ArgumentParser:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=d(0), help="master seed (default 0)")
    p.add_argument("--out", default=d(None), help="write output to this file")
    p.add_argument("--format", choices=("text", "json", "csv"), default=d(None),
                   help="output format (default: text, or json for records)")
    return p


def _output(args, payload, text: Optional[str] = None, rows: Optional[list] = None, default="text") -> None:
    fmt = args.format or default
    if fmt == "text" and text is None:
        fmt = "json"
    if fmt == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        if rows is None:
            rows = [["key", "value"]] + [[k, json.dumps(v) if isinstance(v, (dict, list)) else v]
                                         for k, v in sorted(payload.items())]
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out = buf.getvalue()
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ---------- commands ----------

def cmd_field(args):
    F = parse_field(args.field, args.modulus)
    payload = {
        "p": F.characteristic,
        "e": F.extension_degree,
        "q": F.order,
        "modulus": list(F.modulus),
        "subfield": F.subfield_elements(),
    }
    text = [f"{F!r}", f"order {F.order}", f"prime subfield {payload['subfield']}"]
    if args.tables:
        els = list(F.elements())
        payload["add"] = [[F.add(a, b) for b in els] for a in els]
        payload["mul"] = [[F.mul(a, b) for b in els] for a in els]
        text.append("mul table:")
        text += [" ".join(map(str, row)) for row in payload["mul"]]
    _output(args, payload, "\n".join(text))


def cmd_encode(args):
    code = load_code(args.code)
    if isinstance(code, ExplicitCode):
        raise ListRecError("encode needs an rs code")
    w = rs_encode(code, args.coeffs)
    _output(args, {"coeffs": args.coeffs, "codeword": list(w)}, " ".join(map(str, w)),
            [["coordinate", "symbol"]] + [[i + 1, s] for i, s in enumerate(w)])


def cmd_puncture(args):
    code = load_code(args.code)
    if args.random is not None:
        pmap, out = random_puncture(code, args.random, args.seed)
    else:
        pmap = PunctureMap(tuple(sorted(i - 1 for i in args.keep)))
        out = puncture(code, pmap)
    text = dumps_code(out)
    payload = {"kept": [i + 1 for i in pmap.kept], "code": text,
               "collided": getattr(out, "collided", False)}
    _output(args, payload, text)


def cmd_recover(args):
    code = load_code(args.code)
    lists = load_lists(args.lists)
    res = recover(code, lists, as_fraction(args.rho), args.output_cap)
    payload = {"query": {"code": args.code, "lists": args.lists, "rho": fraction_str(res.rho),
                         "output_cap": args.output_cap}}
    payload.update(res.to_dict())
    rows = [["index", "codeword", "coefficients"]]
    for j, w in enumerate(res.found):
        coeffs = "" if res.coefficients is None else " ".join(map(str, res.coefficients[j]))
        rows.append([j, " ".join(map(str, w)), coeffs])
    _output(args, payload, rows=rows, default="json")


def cmd_johnson(args):
    if args.decoding:
        if args.q is None or args.n is None:
            raise ListRecError("--decoding needs --q and --n")
        b = johnson_decoding(args.q, args.n, as_fraction(args.epsilon))
        payload = {"radius": fraction_str(b.radius), "list_bound": fraction_str(b.list_bound),
                   "required_distance": fraction_str(b.required_distance),
                   "constant_unspecified": True}
        text = (f"radius = {fraction_str(b.radius)}\n"
                f"list bound = O({fraction_str(b.list_bound)}) (constant unspecified)\n"
                f"requires distance >= {fraction_str(b.required_distance)}")
    else:
        if args.ell is None:
            raise ListRecError("--recovery needs --ell")
        L = johnson_recovery(as_fraction(args.epsilon), as_fraction(args.rho), args.ell)
        payload = {"epsilon": args.epsilon, "rho": args.rho, "ell": args.ell, "L": fraction_str(L)}
        text = f"L = {fraction_str(L)}"
    _output(args, payload, text)


def cmd_check_theorem(args):
    if args.theorem == "main":
        missing = [f for f in ("q", "n", "d", "ell", "m") if getattr(args, f) is None]
        if missing:
            raise ListRecError("main theorem check needs " + ", ".join("--" + f for f in missing))
        size = args.code_size if args.code_size is not None else args.q ** (args.d + 1)
        rep = check_main_theorem(args.q, args.n, args.d, args.ell, args.m,
                                 as_fraction(args.alpha), as_fraction(args.rho), size)
    else:
        missing = [f for f in ("q", "n", "epsilon") if getattr(args, f) is None]
        if missing:
            raise ListRecError("simple theorem check needs " + ", ".join("--" + f for f in missing))
        rep = check_simple_theorem(args.q, args.n, as_fraction(args.alpha), as_fraction(args.rho),
                                   as_fraction(args.epsilon), as_fraction(args.c), args.code_size)
    payload = rep.to_dict()
    rows = [["name", "lhs", "relation", "rhs", "satisfied"]] + [
        [i["name"], i["lhs"], i["relation"], i["rhs"], i["satisfied"]] for i in payload["inequalities"]]
    _output(args, payload, rep.table(), rows)


def cmd_gr06(args):
    rep = gr06_report(gr06_build(args.p, args.e))
    text = "\n".join(f"{k}: {v}" for k, v in rep.items())
    _output(args, rep, text)


def cmd_sumset(args):
    rng = as_generator(args.seed)
    reports = []
    for _ in range(args.trials):
        pts = args.points if args.points else random_sumset_points(args.q, args.m, rng)
        inst = sumset_build(args.q, pts, args.t, enforce_guard=not args.no_guard)
        rep = sumset_verify(inst).to_dict()
        rep["points"] = list(inst.points)
        reports.append(rep)
        if args.points:
            break
    payload = reports[0] if len(reports) == 1 else {"reports": reports}
    cols = ["A0_size", "A1_size", "family_size", "ell", "bound_2t_pow", "collision_count_A0",
            "containment", "size_bound_holds", "guard_satisfied"]
    rows = [cols] + [[r[c] for c in cols] for r in reports]
    _output(args, payload, rows=rows, default="json")


def cmd_expander_build(args):
    graph = code_graph(load_code(args.code))
    payload = {"left": len(graph.codewords), "degree": graph.n, "right": len(graph.right),
               "edges": [[j, i + 1, s] for j, i, s in graph.edges()]}
    rows = [["codeword_id", "coordinate", "symbol"]] + payload["edges"]
    _output(args, payload, dumps_edges(graph), rows)


def cmd_expander_check(args):
    code = load_code(args.code)
    if args.ell is not None:
        rep = zero_error_bridge(code, args.k, args.ell)
        _output(args, rep.to_dict(), default="json")
        return
    graph = code_graph(code)
    if args.trials:
        rep = expansion_sampled(graph, args.k, args.trials, args.seed)
    else:
        rep = expansion_exhaustive(graph, args.k)
    d = rep.to_dict()
    text = (f"k = {rep.k}, d = {rep.d}, min |N(S)| = {rep.min_neighborhood}, "
            f"epsilon = {d['achieved_epsilon']} ({rep.mode})")
    _output(args, d, text)


def cmd_experiment_run(args):
    cfg = load_config(args.config)
    res = run_experiment(cfg)
    fmt = args.format if args.format in ("json", "csv") else cfg.format
    path = args.out or cfg.output
    text = res.write(path, fmt)
    if not path:
        sys.stdout.write(text)


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    ap = _Parser(prog="listrec", description=__doc__.splitlines()[0], parents=[_common(False)])
    ap.add_argument("--version", action="version", version=f"listrec {__version__}")
    sub = ap.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("field", parents=[common], help="describe a finite field")
    p.add_argument("field", help="p or p^e")
    p.add_argument("--modulus", type=int, nargs="+", help="coefficients, low degree first")
    p.add_argument("--tables", action="store_true", help="include add/mul tables")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("encode", parents=[common], help="encode a polynomial")
    p.add_argument("--code", required=True)
    p.add_argument("--coeffs", type=int, nargs="+", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("puncture", parents=[common], help="puncture a code")
    p.add_argument("--code", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--keep", type=int, nargs="+", help="1-indexed coordinates to keep")
    g.add_argument("--random", type=int, metavar="M", help="keep a uniform random M-subset")
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("recover", parents=[common], help="exact list recovery")
    p.add_argument("--code", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--rho", default="0")
    p.add_argument("--output-cap", type=int)
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("johnson", parents=[common], help="Johnson bounds")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--recovery", action="store_true")
    g.add_argument("--decoding", action="store_true")
    p.add_argument("--epsilon", required=True)
    p.add_argument("--rho", default="0")
    p.add_argument("--ell", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_johnson)

    p = sub.add_parser("check-theorem", parents=[common], help="evaluate theorem hypotheses")
    p.add_argument("--theorem", choices=("main", "simple"), default="main")
    p.add_argument("--alpha", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--epsilon")
    p.add_argument("--c", default="1", help="the unspecified absolute constant (default 1)")
    p.add_argument("--code-size", type=int, help="|C| (main default: q^(d+1))")
    p.set_defaults(func=cmd_check_theorem)

    p = sub.add_parser("adversarial", parents=[common], help="adversarial list constructions")
    asub = p.add_subparsers(dest="construction", metavar="construction")
    asub.required = True
    a = asub.add_parser("gr06", parents=[common], help="subfield lists")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--e", type=int, default=1)
    a.set_defaults(func=cmd_gr06)
    a = asub.add_parser("sumset", parents=[common], help="sumset line family")
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--t", type=int, required=True)
    a.add_argument("--points", type=int, nargs="+", help="s_0=0 s_1=1 s_2 ... (default random)")
    a.add_argument("--trials", type=int, default=1, help="random point sets to try")
    a.add_argument("--no-guard", action="store_true", help="allow 64 t^(2m) > q")
    a.set_defaults(func=cmd_sumset)

    p = sub.add_parser("expander", parents=[common], help="code graph G(C)")
    esub = p.add_subparsers(dest="action", metavar="action")
    esub.required = True
    e = esub.add_parser("build", parents=[common], help="export the edge list")
    e.add_argument("--code", required=True)
    e.set_defaults(func=cmd_expander_build)
    e = esub.add_parser("check", parents=[common], help="measure expansion")
    e.add_argument("--code", required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--trials", type=int, help="sample this many k-sets instead of exhaustive search")
    e.add_argument("--ell", type=int, help="also cross-check (ell, k-1) zero-error recoverability")
    e.set_defaults(func=cmd_expander_check)

    p = sub.add_parser("experiment", parents=[common], help="random-puncturing experiments")
    xsub = p.add_subparsers(dest="action", metavar="action")
    xsub.required = True
    x = xsub.add_parser("run", parents=[common], help="run a config file")
    x.add_argument("config")
    x.set_defaults(func=cmd_experiment_run)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except CapExceeded as exc:
        print(f"listrec: cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (ListRecError, OSError) as exc:
        print(f"listrec: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0
cli_main = main
