"""Batch command-line front end.

Exit codes: 0 success, 1 a requested relation failed to verify,
2 usage error (bad flags, unknown names, unknown twists), 3 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import constraints as cs
from . import relations as rel
from . import surface as sf
from .twistwords import ExpressionError, format_word, parse_expression
from .words import conjugate_equal

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--data-dir", default=None,
                        help=f"data directory (default: ${rel.DATA_ENV}, ./data, then the shipped data)")
    common.add_argument("--help", action="help", help="show this help and exit")

    p = _Parser(prog="torusfib", add_help=False, parents=[common],
                description="Verify mapping class group relations and enumerate fibration invariants.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("verify", add_help=False, parents=[common], help="verify catalog relations")
    v.add_argument("name", nargs="?")
    v.add_argument("--all", action="store_true")
    v.add_argument("--mode", choices=("pi1", "homology", "replay"))

    f = sub.add_parser("feasible", add_help=False, parents=[common], help="enumerate (n, s, sigma)")
    f.add_argument("-g", type=int, required=True, help="fiber genus")
    f.add_argument("-h", type=int, default=1, help="base genus")
    f.add_argument("-k", type=int, required=True, help="number of singular fibers")
    f.add_argument("--sharp", action="store_true", help="also enforce the unrounded upper bound")
    f.add_argument("--disable", action="append", default=[], choices=cs.CONSTRAINT_IDS)

    b = sub.add_parser("bounds", add_help=False, parents=[common], help="N(g,1) interval table")
    b.add_argument("-gmax", "--gmax", type=int, required=True)

    a = sub.add_parser("act", add_help=False, parents=[common], help="image of a curve under a word")
    a.add_argument("--word", required=True)
    a.add_argument("--curve", required=True)
    a.add_argument("--model", default="sigma_2_2")

    sub.add_parser("validate", add_help=False, parents=[common], help="check the twist tables")
    return p


def _emit(args, data: dict, text: str, out):
    if args.json:
        out.write(json.dumps(data, indent=1, ensure_ascii=False) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_verify(args, out) -> int:
    ctx = rel.Context(args.data_dir)
    entries = rel.catalog(ctx)
    if args.all == bool(args.name):
        raise UsageError("give a relation name or --all")
    if not args.all:
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            raise UsageError(f"no relation named {args.name!r}")
    results = []
    for e in entries:
        try:
            results.append(rel.verify_relation(e, ctx, args.mode))
        except rel.RelationError as err:
            raise UsageError(f"{e.name}: {err}") from None
    lines = []
    for r in results:
        flag = "ok" if r.verified else "FAILED"
        extra = " (necessary condition only)" if r.necessary_only else ""
        lines.append(f"{r.name:26s} {r.mode:9s} {flag:6s} {r.seconds * 1000:8.1f} ms{extra}")
        lines.extend(f"    {t}" for t in r.trace)
    data = {"results": [{"name": r.name, "mode": r.mode, "verified": r.verified,
                         "necessary_only": r.necessary_only, "trace": list(r.trace),
                         "seconds": r.seconds} for r in results]}
    _emit(args, data, "\n".join(lines), out)
    return EXIT_OK if all(r.verified for r in results) else EXIT_FAIL


def cmd_feasible(args, out) -> int:
    try:
        rep = cs.feasible_tuples(args.g, args.h, args.k, tuple(args.disable), args.sharp)
    except cs.DomainError as e:
        raise UsageError(str(e)) from None
    lines = [f"g={rep.g} h={rep.h} k={rep.k}"]
    for n, s, why in rep.pairs:
        lines.append(f"  (n,s)=({n},{s}): {why}")
    for c in rep.candidates:
        bad = [v.id for v in c.verdicts if v.rejects]
        lines.append(f"  (n,s,sigma)=({c.n},{c.s},{c.sigma}): "
                     + ("survives" if not bad else "fails " + ", ".join(bad)))
    surv = rep.survivors
    lines.append("survivors: " + (", ".join(str(t) for t in surv) if surv else "none"))
    _emit(args, rep.to_json(), "\n".join(lines), out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    try:
        rows = cs.n_bounds_table(args.gmax)
    except cs.DomainError as e:
        raise UsageError(str(e)) from None
    lines = [f"{'g':>3}  N(g,1)     lower source / upper source"]
    for r in rows:
        lines.append(f"{r.g:>3}  [{r.lower},{r.upper}]".ljust(16) + f" {r.lower_source} / {r.upper_source}")
    data = {"rows": [{"g": r.g, "lower": r.lower, "upper": r.upper,
                      "lower_source": r.lower_source, "upper_source": r.upper_source} for r in rows]}
    _emit(args, data, "\n".join(lines), out)
    return EXIT_OK


def cmd_act(args, out) -> int:
    ctx = rel.Context(args.data_dir)
    model = ctx.model(args.model)
    if not isinstance(model, sf.SurfaceModel):
        raise UsageError(f"model {args.model!r} has no curve system")
    try:
        word = parse_expression(args.word)
        model.curve(args.curve)
        img = sf.image_of_curve(model, word, args.curve)
        status = sf.fixed_up_to_isotopy(model, word, args.curve)
    except (ExpressionError, sf.UnknownSymbolError, KeyError) as e:
        raise UsageError(f"cannot evaluate: {e}") from None
    named = [n for n, c in model.curves.items()
             if conjugate_equal(img, model.curve(n).word, unoriented=True)]
    data = {"word": format_word(word), "curve": args.curve, "image": model.format_word(img),
            "status": status, "image_is": named}
    text = (f"{args.curve} -> {model.format_word(img)}\n"
            f"status: {status}" + (f"\nimage is isotopic to: {', '.join(named)}" if named else ""))
    _emit(args, data, text, out)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    ctx = rel.Context(args.data_dir)
    t0 = time.perf_counter()
    report = sf.validate_twist_tables(ctx.model("sigma_2_2"))
    dt = time.perf_counter() - t0
    data = {"passed": report.passed, "checks": len(report.checks),
            "failures": [c.name for c in report.failures], "seconds": dt}
    text = f"{len(report.checks)} checks, {len(report.failures)} failures, {dt * 1000:.1f} ms"
    text += "".join(f"\n  {c.name}: {c.detail}" for c in report.failures)
    _emit(args, data, text, out)
    return EXIT_OK if report.passed else EXIT_DATA


COMMANDS = {"verify": cmd_verify, "feasible": cmd_feasible, "bounds": cmd_bounds,
            "act": cmd_act, "validate": cmd_validate}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err.write(f"torusfib: {e}\n")
        return EXIT_USAGE
    except (sf.CurveSystemError, OSError, json.JSONDecodeError, rel.rw.ReplayError) as e:
        err.write(f"torusfib: data error: {e}\n")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
