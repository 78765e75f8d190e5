"""Command-line front end.

Exit status: 0 when no check failed, 2 when some check failed, 1 on usage
or input errors (grammar help goes to stderr).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import checks, counterexample
from .errors import PuiseuxError
from .hplane import hp_distance
from .report import FAIL
from .sampling import make_rng
from .textio import (
    GRAMMAR_HELP,
    SeriesSyntaxError,
    format_rational,
    format_tree_point,
    parse_point,
    parse_rational,
    parse_series,
    parse_tree_point,
    reports_to_json,
)
from .tree import median, project, tree_distance

VERIFY_TARGETS = ("cauchy", "branching", "vertical", "obstruction", "axioms", "crossratio", "all")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text):
    try:
        return parse_rational(text)
    except SeriesSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=_natural, default=0)
    common.add_argument("--window", type=_rational, default=Fraction(32))
    common.add_argument("--max-n", dest="max_n", type=_natural, default=32)

    parser = _Parser(prog="puiseux-tree", description="Puiseux series, the half plane over them, and its Q-tree.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dist = sub.add_parser("dist", help="pseudo-distance in the half plane or the tree")
    dist_sub = dist.add_subparsers(dest="space", required=True, parser_class=_Parser)
    hp = dist_sub.add_parser("hp", parents=[common], help="distance of two points 'x;y'")
    hp.add_argument("--z1", required=True)
    hp.add_argument("--z2", required=True)
    tr = dist_sub.add_parser("tree", parents=[common], help="distance of two tree points 'u;t'")
    tr.add_argument("--p1", required=True)
    tr.add_argument("--p2", required=True)

    pr = sub.add_parser("project", parents=[common], help="canonical tree point of 'x;y'")
    pr.add_argument("--z", required=True)

    md = sub.add_parser("median", parents=[common], help="median of three tree points")
    md.add_argument("--p1", required=True)
    md.add_argument("--p2", required=True)
    md.add_argument("--p3", required=True)

    ver = sub.add_parser("verify", parents=[common], help="run verification checks")
    ver.add_argument("target", choices=VERIFY_TARGETS)
    ver.add_argument("--a", help="series for 'verify obstruction' (default: built-in corpus)")
    ver.add_argument("--x", help="first foot for 'verify vertical'")
    ver.add_argument("--x2", help="second foot for 'verify vertical'")
    ver.add_argument("--samples", type=_natural, default=200)
    return parser


def _emit_value(args, command, params, text, out):
    if args.format == "json":
        doc = {"command": command, "params": params, "result": text}
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")
    return 0


def _run_verify(args):
    t = args.target
    if t == "cauchy":
        return [counterexample.verify_cauchy(args.max_n)]
    if t == "branching":
        return [counterexample.verify_branching(args.max_n, max(args.samples // 20, 10), args.seed)]
    if t == "vertical":
        if args.x is None and args.x2 is None:
            return [counterexample.verify_vertical_suite(args.max_n, 4, args.seed)]
        if args.x is None or args.x2 is None:
            raise UsageError("--x and --x2 go together")
        rng = make_rng(args.seed, "cli-vertical")
        offsets = [Fraction(rng.randint(0, 64), rng.randint(1, 8)) for _ in range(args.samples)]
        return [counterexample.verify_vertical_identification(parse_series(args.x), parse_series(args.x2), offsets)]
    if t == "obstruction":
        if args.a is not None:
            return [counterexample.obstruction_witness(parse_series(args.a), args.max_n)]
        return [counterexample.verify_obstruction_corpus(args.max_n, args.seed)]
    if t == "axioms":
        return [
            checks.verify_valuation_axioms(args.samples, args.seed),
            checks.verify_pseudometric(args.samples, args.seed),
            checks.verify_tree_structure(args.samples, args.seed),
        ]
    if t == "crossratio":
        return [checks.verify_cross_ratio(args.samples, args.seed, args.window)]
    return counterexample.verify_all(args.max_n, args.seed, args.samples, args.window)


def _text_report(reports):
    from .textio import _jsonable

    lines = []
    for r in reports:
        details = " ".join(f"{k}={json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v}"
                           for k, v in _jsonable(r.witness).items())
        lines.append(f"{r.status.upper():4}  {r.name}  {details}".rstrip())
    counts = {s: sum(r.status == s for r in reports) for s in ("pass", "fail", "skip")}
    lines.append(f"summary: pass={counts['pass']} fail={counts['fail']} skip={counts['skip']}")
    return "\n".join(lines) + "\n"


def _dispatch(args, out):
    if args.command == "dist" and args.space == "hp":
        z1, z2 = parse_point(args.z1), parse_point(args.z2)
        d = hp_distance(z1, z2)
        return _emit_value(args, "dist hp", {"z1": args.z1, "z2": args.z2}, format_rational(d), out)
    if args.command == "dist":
        p1, p2 = parse_tree_point(args.p1), parse_tree_point(args.p2)
        d = tree_distance(p1, p2)
        return _emit_value(args, "dist tree", {"p1": args.p1, "p2": args.p2}, format_rational(d), out)
    if args.command == "project":
        p = project(parse_point(args.z))
        return _emit_value(args, "project", {"z": args.z}, format_tree_point(p), out)
    if args.command == "median":
        ps = [parse_tree_point(s) for s in (args.p1, args.p2, args.p3)]
        params = {"p1": args.p1, "p2": args.p2, "p3": args.p3}
        return _emit_value(args, "median", params, format_tree_point(median(*ps)), out)

    reports = _run_verify(args)
    params = {"max_n": args.max_n, "seed": args.seed, "samples": args.samples, "window": args.window}
    if args.a is not None:
        params["a"] = args.a
    if args.x is not None:
        params["x"], params["x2"] = args.x, args.x2
    if args.format == "json":
        out.write(reports_to_json(f"verify {args.target}", params, reports))
    else:
        out.write(_text_report(reports))
    return 2 if any(r.status == FAIL for r in reports) else 0


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except (UsageError, SeriesSyntaxError, ValueError, PuiseuxError) as exc:
        err.write(f"error: {exc}\n\n{GRAMMAR_HELP}\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
