"""Command-line surface: analyze, enumerate, catalog, verify-all, plot."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance
from .catalog import (
    FAMILIES,
    ConstraintViolation,
    VerificationFailed,
    instantiate_detail,
    manifest,
    solve_constraint,
)
from .combinat import (
    enumerate_tuples,
    j_list_discrepancy,
    pair_assignment_search,
    realizability,
)
from .field import FieldContext
from .geometry import GenericityError, ValidationError
from .io import ParseError, arrangement_to_json, dump_arrangement, load_arrangement
from .plot import SliceError, render_svg
from .report import analyze, report_text
from .singularities import UnsupportedSingularityError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_UNSUPPORTED = 4


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _load(path: str):
    try:
        return load_arrangement(path), None
    except (OSError, json.JSONDecodeError, ParseError) as ex:
        return None, _fail(EXIT_PARSE, f"cannot parse {path}: {ex}")
    except ValidationError as ex:
        return None, _fail(EXIT_VALIDATION, f"invalid arrangement: {ex}")


def _parse_window(text: str) -> tuple[float, float, float, float]:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 4 or parts[0] >= parts[1] or parts[2] >= parts[3]:
        raise ValueError(f"bad window {text!r}, expected x0,x1,y0,y1")
    return tuple(parts)


def _parse_slice(text: str) -> tuple[float, float, float]:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"bad slice {text!r}, expected a,b,c for Z = aX+bY+c")
    return tuple(parts)


def _explicit_points(rep) -> list:
    return [
        (cp.sing_type.name, pt)
        for cp in rep.singularities.points
        for pt in cp.locus.points
    ]


def cmd_analyze(args) -> int:
    arr, code = _load(args.path)
    if arr is None:
        return code
    try:
        rep = analyze(arr, args.seed)
    except (UnsupportedSingularityError, GenericityError) as ex:
        return _fail(EXIT_UNSUPPORTED, f"unsupported configuration: {ex}")
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(report_text(rep))
    if args.plot:
        svg = render_svg(arr, singular_points=_explicit_points(rep))
        with open(args.plot, "w") as fh:
            fh.write(svg)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    tuples = enumerate_tuples(args.d1, include_j=args.with_j)
    for wc in tuples:
        line = " ".join(str(v) for v in wc)
        if args.feasibility:
            verdict = pair_assignment_search(wc)
            status = "feasible" if verdict.feasible else "infeasible"
            line += f"  {status}  {realizability(wc)}"
        print(line)
    if args.with_j and args.d1 == 2:
        disc = j_list_discrepancy()
        print(f"# note: {disc['note']}", file=sys.stderr)
        for entry in disc["only_in_printed"]:
            print(
                f"#   printed-only {entry['vector']}: tau {entry['tau']}, "
                f"budget {entry['budget']}, satisfies equations: "
                f"{entry['satisfies_equations']}",
                file=sys.stderr,
            )
        for entry in disc["only_in_derived"]:
            print(
                f"#   derived-only {entry['vector']}: tau {entry['tau']}, "
                f"budget {entry['budget']}, satisfies equations: "
                f"{entry['satisfies_equations']}",
                file=sys.stderr,
            )
    return EXIT_OK


def _parse_params(text: str, ctx: FieldContext) -> dict:
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise ValueError(f"bad parameter {item!r}, expected name=value")
        name, _, value = item.partition("=")
        out[name.strip()] = ctx.elem(Fraction(value.strip()))
    return out


def cmd_catalog(args) -> int:
    if args.subcommand == "list":
        print(json.dumps(manifest(), indent=2))
        return EXIT_OK
    if args.subcommand == "fixtures":
        from .catalog import known_arrangements

        out = []
        for name, arr, meta in known_arrangements():
            out.append({"name": name, **meta, "arrangement": arrangement_to_json(arr)})
        print(json.dumps(out, indent=2))
        return EXIT_OK
    # instantiate
    fid = args.family
    if fid not in FAMILIES:
        return _fail(EXIT_VALIDATION, f"unknown family {fid!r}")
    ctx = FieldContext(-3) if FAMILIES[fid].needs_sqrt_minus3 else FieldContext(1)
    try:
        params = _parse_params(args.params or "", ctx)
    except (ValueError, ZeroDivisionError) as ex:
        return _fail(EXIT_PARSE, str(ex))
    try:
        solutions = solve_constraint(fid, params, ctx)
    except ConstraintViolation as ex:
        return _fail(EXIT_VALIDATION, f"{fid} constraint: {ex}")
    docs = []
    arrangements = []
    for sol in solutions:
        try:
            inst = instantiate_detail(fid, sol, ctx)
        except (ConstraintViolation, ValidationError) as ex:
            return _fail(EXIT_VALIDATION, f"{fid} constraint: {ex}")
        except VerificationFailed as ex:
            return _fail(EXIT_VALIDATION, str(ex))
        docs.append(
            {
                "family": fid,
                "formula_path": inst.formula_path,
                "params": {
                    k: {"r": str(v.r), "s": str(v.s)} for k, v in inst.params.items()
                },
                "arrangement": arrangement_to_json(inst.arrangement),
            }
        )
        arrangements.append(inst.arrangement)
    payload = docs[0] if len(docs) == 1 else docs
    print(json.dumps(payload, indent=2))
    if args.out:
        if len(docs) != 1:
            return _fail(
                EXIT_VALIDATION,
                "constraint has several solutions; pin the parameter to pick "
                "one before writing an arrangement file",
            )
        with open(args.out, "w") as fh:
            fh.write(dump_arrangement(arrangements[0]))
    return EXIT_OK


def cmd_verify_all(args) -> int:
    results = acceptance.run_all(args.filter)
    if not results:
        return _fail(EXIT_VALIDATION, f"no criteria match filter {args.filter!r}")
    summary = {
        "criteria": [
            {
                "id": r.cid,
                "name": r.name,
                "passed": r.passed,
                "elapsed_seconds": round(r.elapsed, 3),
                "detail": r.detail,
            }
            for r in results
        ],
        "passed": all(r.passed for r in results),
        "total_seconds": round(sum(r.elapsed for r in results), 3),
    }
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{r.cid} {mark} {r.elapsed:7.2f}s  {r.name}", file=sys.stderr)
        if not r.passed:
            print(f"    {r.detail}", file=sys.stderr)
    print(json.dumps(summary, indent=2))
    return EXIT_OK if summary["passed"] else 1


def cmd_plot(args) -> int:
    arr, code = _load(args.path)
    if arr is None:
        return code
    try:
        window = _parse_window(args.window)
        slice_form = _parse_slice(args.slice)
    except ValueError as ex:
        return _fail(EXIT_PARSE, str(ex))
    try:
        from .singularities import singularity_report

        points = [
            (cp.sing_type.name, pt)
            for cp in singularity_report(arr).points
            for pt in cp.locus.points
        ]
    except (UnsupportedSingularityError, GenericityError) as ex:
        return _fail(EXIT_UNSUPPORTED, f"unsupported configuration: {ex}")
    try:
        svg = render_svg(arr, window=window, slice_form=slice_form,
                         singular_points=points)
    except SliceError as ex:
        return _fail(EXIT_VALIDATION, str(ex))
    with open(args.out, "w") as fh:
        fh.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triconic",
        description="Exact analyzer for arrangements of three smooth conics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline on an arrangement file")
    p.add_argument("path", help="arrangement file (.conics.json)")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--plot", metavar="OUT", help="also write an SVG real slice")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized coordinate change (default 0)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list admissible weak combinatorics")
    p.add_argument("--d1", type=int, choices=(1, 2), required=True)
    p.add_argument("--with-j", action="store_true", dest="with_j",
                   help="include tuples with a J20 point")
    p.add_argument("--feasibility", action="store_true",
                   help="append pair-assignment verdicts")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="family catalog access")
    csub = p.add_subparsers(dest="subcommand", required=True)
    csub.add_parser("list", help="list families and fixtures")
    ci = csub.add_parser("instantiate", help="emit a verified family member")
    ci.add_argument("family", help="family id, F1 through F6")
    ci.add_argument("--params", help="comma-separated name=value rationals")
    ci.add_argument("--out", help="write the arrangement file here")
    csub.add_parser("fixtures", help="emit the named fixture arrangements")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-all", help="run the acceptance suite")
    p.add_argument("--filter", help="run only criteria whose name contains this")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("plot", help="write an SVG of the real affine slice")
    p.add_argument("path", help="arrangement file (.conics.json)")
    p.add_argument("out", help="output SVG path")
    p.add_argument("--window", default="-4,4,-4,4", help="x0,x1,y0,y1")
    p.add_argument("--slice", default="0,0,1",
                   help="a,b,c for the chart Z = aX + bY + c")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
