"""Command-line interface: ``branchcurve <group> <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import geography as geo
from . import io
from .monodromy import DEFAULT_NU_BOUND, enumerate_transposition_homs
from .patchwork.conditions import check_C2, sum_blocks
from .patchwork.convexity import check_convexity
from .patchwork.polygons import validate_subdivision
from .patchwork.targets import TARGET_TABLE, plan, verify_targets
from .reproduce import SCRIPTS, reproduce
from .segre import SurfaceInstance, branch_curve, cubic_pipeline, verify_segre

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class Output:
    text: str
    data: dict
    rows: Optional[list] = None  # CSV rows; defaults to a single row built from ``data``
    code: int = EXIT_OK
    columns: Optional[list] = field(default=None)


def _render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.data, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        rows = out.rows if out.rows is not None else [
            {k: v for k, v in out.data.items() if not isinstance(v, (dict, list))}]
        columns = out.columns or (list(rows[0]) if rows else [])
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _csv_value(v) for k, v in row.items()})
        return buf.getvalue()
    return out.text if out.text.endswith("\n") else out.text + "\n"


def _csv_value(v):
    if isinstance(v, bool):
        return "pass" if v else "fail"
    return v


def _resolve(path: str) -> Path:
    """A path on disk, or the name of a bundled sample file."""
    p = Path(path)
    if p.exists():
        return p
    bundled = io.data_path(path)
    if bundled.is_file():
        return bundled
    raise io.InputError(f"file not found: {path}")


def _load(path: str):
    return io.read_json(_resolve(path))


def _fmt_poly(f) -> str:
    return repr(f)


# geography


def _class_args(args) -> geo.CurveClass:
    return geo.CurveClass(args.d, args.c, args.n)


def cmd_dual(args) -> Output:
    cc = _class_args(args)
    dual = geo.plucker_dual(cc)
    data = {"d": cc.d, "c": cc.c, "n": cc.n, "chi": cc.chi, "g": cc.g,
            "d_star": dual.d_star, "c_star": dual.c_star, "n_star": dual.n_star,
            "chi_star": dual.chi_star, "g_star": dual.g_star}
    text = (f"V({cc.d},{cc.c},{cc.n}): chi={cc.chi}, g={cc.g}\n"
            f"dual: d*={dual.d_star}, c*={dual.c_star}, n*={dual.n_star}, chi*={dual.chi_star}, g*={dual.g_star}")
    return Output(text, data)


def _report_row(report: geo.ConstraintReport) -> dict:
    cc = report.curve
    row = {"d": cc.d, "c": cc.c, "n": cc.n, "chi": cc.chi, "g": cc.g}
    for name in geo.CONSTRAINT_NAMES:
        row[name] = report.results.get(name, "")
    row["admissible"] = report.admissible
    return row


def cmd_admissible(args) -> Output:
    cc = _class_args(args)
    report = geo.full_report(cc, args.nu, args.general_type, not args.no_dual)
    lines = [f"V({cc.d},{cc.c},{cc.n})"]
    for c in geo.select_tier1(not args.no_dual) + geo.select_tier2(args.general_type):
        if c.name in report.results:
            state = "pass" if report.results[c.name] else "FAIL"
            lines.append(f"  tier {c.tier} {c.name:<20} {state}  {c.inequality}  [{c.source}]")
    if report.tier2_violations is None:
        lines.append("  tier 2 not evaluated: not a nodal-cuspidal class")
    lines.append("admissible" if report.admissible else "not admissible")
    data = {"curve": [cc.d, cc.c, cc.n], "results": report.results,
            "tier1_violations": report.tier1_violations, "tier2_violations": report.tier2_violations,
            "admissible": report.admissible}
    return Output("\n".join(lines), data, [_report_row(report)],
                  EXIT_OK if report.admissible else EXIT_FAIL)


def cmd_enumerate(args) -> Output:
    d = args.degree
    bound = args.bound if args.bound is not None else geo.DEFAULT_DEGREE_BOUND
    survivors = geo.enumerate_candidates(d, bound=bound)
    if args.all:
        pa = (d - 1) * (d - 2) // 2
        classes = [(c, n) for c in range(pa + 1) for n in range(pa + 1) if c or n]
    else:
        classes = survivors
    rows = [_report_row(geo.full_report(geo.CurveClass(d, c, n))) for c, n in classes]
    columns = ["d", "c", "n", "chi", "g"] + list(geo.CONSTRAINT_NAMES) + ["admissible"]
    text = "\n".join([f"degree {d}: {len(survivors)} candidate (c, n)"] + [f"  ({c}, {n})" for c, n in survivors])
    data = {"degree": d, "candidates": [list(p) for p in survivors]}
    return Output(text, data, rows, columns=columns)


def cmd_smooth(args) -> Output:
    sb = geo.smooth_surface_branch(args.nu)
    cc = sb.cc
    lines = [f"nu={args.nu}: branch curve V({cc.d},{cc.c},{cc.n}), a={sb.a}"]
    lines += [f"  {k}: {'ok' if ok else 'FAIL'}" for k, ok in sb.identities.items()]
    data = {"nu": args.nu, "d": cc.d, "c": cc.c, "n": cc.n, "a": sb.a, "identities": sb.identities}
    return Output("\n".join(lines), data)


def cmd_ordinary(args) -> Output:
    data_in = io.ordinary_from_json(_load(args.json))
    inv = geo.ordinary_invariants(data_in)
    data = {"input": io.ordinary_to_json(data_in), "d": inv.d, "c": inv.cc.c, "n": inv.cc.n,
            "c1sq": inv.chern.c1sq, "c2": inv.chern.c2, "pinch": inv.pinch}
    text = (f"branch curve B({inv.d},{inv.cc.c},{inv.cc.n}); c1^2={inv.chern.c1sq}, c2={inv.chern.c2}, "
            f"pinch points={inv.pinch}")
    return Output(text, data)


def cmd_dims(args) -> Output:
    r = geo.dimension_report(args.nu)
    data = {"nu": r.nu, "dim_S": r.dim_S, "dim_B3": r.dim_B3, "vdim": r.vdim,
            "delta_a": r.delta_a, "delta_a1": r.delta_a1}
    text = "\n".join(f"{k} = {v}" for k, v in data.items())
    return Output(text, data)


# segre


def _segre_data(report) -> dict:
    return {"nu": report.nu, "nodes": report.nodes, "cusps": report.cusps, "expected": list(report.expected),
            "counts_ok": report.counts_ok, "h0_a": report.h0_a, "L_unique": report.L_unique,
            "L": io.poly_to_json(report.L) if report.L is not None else None,
            "h0_a1": report.h0_a1, "L1": io.poly_to_json(report.L1) if report.L1 is not None else None,
            "tangents_separated": {repr(p): ok for p, ok in report.tangents_separated.items()},
            "l1_status": report.l1_status, "candidates_tried": report.candidates_tried,
            "reasons": report.reasons, "status": report.status}


def _segre_text(report) -> str:
    lines = [f"nodes={report.nodes} cusps={report.cusps} expected={report.expected} "
             f"counts {'ok' if report.counts_ok else 'FAIL'}",
             f"h0 at degree a: {report.h0_a}; L = {_fmt_poly(report.L) if report.L is not None else '-'}",
             f"h0 at degree a+1: {report.h0_a1}; L1 = {_fmt_poly(report.L1) if report.L1 is not None else '-'} "
             f"({report.l1_status}, {report.candidates_tried} candidates)"]
    lines += [f"reason: {r}" for r in report.reasons]
    lines.append(report.status)
    return "\n".join(lines)


def _segre_code(report) -> int:
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_branch(args) -> Output:
    f = io.poly_from_json(_load(args.surface))
    B = branch_curve(SurfaceInstance(f))
    return Output(f"B = {_fmt_poly(B)}\ndegree {B.degree()}", {"branch_curve": io.poly_to_json(B)})


def cmd_verify(args) -> Output:
    B = io.poly_from_json(_load(args.curve))
    xi = io.cycle_from_json(_load(args.cycle))
    hints = [io.poly_from_json(_load(h)) for h in args.hint or ()]
    report = verify_segre(B, xi, args.nu, l1_hints=hints)
    return Output(_segre_text(report), _segre_data(report), code=_segre_code(report))


def cmd_cubic_demo(args) -> Output:
    raw = _load(args.input)
    a, b = io.poly_from_json(raw["a"]), io.poly_from_json(raw["b"])
    points = [io.point_from_json(p) for p in raw["points"]]
    result = cubic_pipeline(a, b, points)
    report = result.report
    lines = [f"a = {_fmt_poly(a)}", f"b = {_fmt_poly(b)}", f"B = {_fmt_poly(result.B)}",
             "B is proportional to b^2 - 4a^3",
             "cusps: " + ", ".join(repr(p) for p in points),
             f"conic through the cusps: {_fmt_poly(result.adjoint_conic)}", _segre_text(report)]
    data = _segre_data(report)
    data["branch_curve"] = io.poly_to_json(result.B)
    return Output("\n".join(lines), data, code=_segre_code(report))


# monodromy


def cmd_monodromy(args) -> Output:
    pres = io.presentation_from_json(_load(args.presentation))
    locals_ = io.locals_from_json(_load(args.locals)) if args.locals else []
    bound = args.bound if args.bound is not None else DEFAULT_NU_BOUND
    lines, rows, table = [], [], {}
    for nu in args.nu:
        classes = enumerate_transposition_homs(pres, nu, locals_, not args.no_transitive,
                                               bound=bound, workers=args.workers)
        table[nu] = [[list(t) for t in h.images] for h in classes]
        lines.append(f"nu={nu}: {len(classes)} classes")
        lines += [f"  {h}" for h in classes]
        rows += [{"nu": nu, "class": k + 1, "images": str(h)} for k, h in enumerate(classes)]
    lines.append("counts: " + ", ".join(f"nu={nu}: {len(v)}" for nu, v in table.items()))
    data = {"classes": {str(k): v for k, v in table.items()},
            "counts": {str(k): len(v) for k, v in table.items()}}
    return Output("\n".join(lines), data, rows, columns=["nu", "class", "images"])


# patchwork


def _subdivision(args):
    if args.plan is not None:
        p = plan(args.plan)
        if p is None:
            raise io.InputError(f"no built-in plan for nu={args.plan}")
        return p.subdivision, p.blocks
    s = io.subdivision_from_json(_load(args.subdivision))
    blocks = io.blocks_from_json(_load(args.blocks)) if getattr(args, "blocks", None) else None
    return s, blocks


def cmd_validate(args) -> Output:
    s, _ = _subdivision(args)
    defects = validate_subdivision(s)
    text = "ok" if not defects else "\n".join(defects)
    return Output(text, {"ok": not defects, "defects": defects}, code=EXIT_FAIL if defects else EXIT_OK)


def cmd_convexity(args) -> Output:
    s, _ = _subdivision(args)
    defects = validate_subdivision(s)
    if defects:
        return Output("invalid subdivision\n" + "\n".join(defects), {"feasible": False, "defects": defects},
                      code=EXIT_FAIL)
    r = check_convexity(s, args.method)
    if not r.feasible:
        return Output(f"infeasible ({r.method})", {"feasible": False, "method": r.method}, code=EXIT_FAIL)
    cert = [[str(v) for v in abc] for abc in r.certificate]
    lines = [f"convex ({r.method}); certificate re-verified"]
    lines += [f"  cell {k}: a={a} b={b} c={c}" for k, (a, b, c) in enumerate(cert)]
    rows = [{"cell": k, "a": a, "b": b, "c": c} for k, (a, b, c) in enumerate(cert)]
    return Output("\n".join(lines), {"feasible": True, "method": r.method, "certificate": cert,
                                     "verified": r.verified}, rows)


def _parse_sigma(text):
    if text is None:
        return None
    vals = [int(v) for v in text.split(",")]
    if len(vals) != 4:
        raise io.InputError("--sigma expects x1,y1,x2,y2")
    return (vals[0], vals[1]), (vals[2], vals[3])


def cmd_c2(args) -> Output:
    s, blocks = _subdivision(args)
    if blocks is None:
        raise io.InputError("condition C2 needs block data (--blocks or --plan)")
    total_c, total_n = sum_blocks(blocks, s)
    r = check_C2(s, blocks, _parse_sigma(args.sigma))
    lines = [f"block totals: {total_c} cusps, {total_n} nodes"]
    if not r.found:
        lines.append("no orientation satisfies the condition")
        return Output("\n".join(lines), {"found": False, "totals": [total_c, total_n]}, code=EXIT_FAIL)
    lines.append("order: " + " ".join(str(k) for k in r.order))
    lines += [f"  cell {k}: C.D = {v}" for k, v in r.intersection_numbers.items()]
    if r.split_blocks:
        lines.append(f"split blocks (checked against the whole cell): {r.split_blocks}")
    data = {"found": True, "totals": [total_c, total_n], "order": r.order,
            "arcs": [list(a) for a in r.orientation],
            "intersection_numbers": {str(k): v for k, v in r.intersection_numbers.items()},
            "split_blocks": r.split_blocks}
    return Output("\n".join(lines), data)


def cmd_targets(args) -> Output:
    if args.constructed:
        constructed = tuple(int(v) for v in args.constructed.split(","))
        if len(constructed) != 3:
            raise io.InputError("--constructed expects d,c,n")
    else:
        constructed = TARGET_TABLE.get(args.nu)
        if constructed is None:
            raise io.InputError(f"no tabulated construction for nu={args.nu}")
    check = verify_targets(args.nu, constructed)
    text = (f"nu={args.nu}: constructed {check.constructed}, required {check.required}: "
            f"{'ok' if check.ok else 'fail'}")
    data = {"nu": args.nu, "constructed": list(check.constructed), "required": list(check.required),
            "degree_ok": check.degree_ok, "cusps_ok": check.cusps_ok, "nodes_ok": check.nodes_ok, "ok": check.ok}
    return Output(text, data, code=EXIT_OK if check.ok else EXIT_FAIL)


# reproduce


def cmd_reproduce(args) -> Output:
    names = list(SCRIPTS) if args.case == "all" else [args.case]
    results = [reproduce(n) for n in names]
    text = "\n".join(r.text() for r in results)
    data = {r.name: {"lines": r.lines, "verdict": r.verdict, "ok": r.ok, "rows": r.rows} for r in results}
    rows = [{"case": r.name, "verdict": r.verdict, "ok": r.ok} for r in results]
    code = EXIT_OK if all(r.ok for r in results) else EXIT_FAIL
    return Output(text, data, rows, code)


# parser


def _curve_args(p):
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--c", type=int, required=True, help="cusps")
    p.add_argument("--n", type=int, required=True, help="nodes")


def _subdivision_args(p, blocks: bool = False):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--subdivision", default="t12_subdivision.json",
                   help="subdivision JSON (default: bundled T_12 plan)")
    g.add_argument("--plan", type=int, help="use the built-in plan for this nu (4, 5 or 7)")
    if blocks:
        p.add_argument("--blocks", default="t12_blocks.json", help="block data JSON keyed by cell index")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--workers", type=int, default=1, help="worker processes for searches")
    common.add_argument("--bound", type=int, help="override the degree or nu bound")

    parser = argparse.ArgumentParser(prog="branchcurve", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    g = groups.add_parser("geography").add_subparsers(dest="command", required=True)
    p = g.add_parser("dual", parents=[common]); _curve_args(p); p.set_defaults(func=cmd_dual)
    p = g.add_parser("admissible", parents=[common]); _curve_args(p)
    p.add_argument("--nu", type=int)
    p.add_argument("--general-type", action="store_true", help="also apply the Bogomolov inequality")
    p.add_argument("--no-dual", action="store_true", help="drop the dual realizability constraints")
    p.set_defaults(func=cmd_admissible)
    p = g.add_parser("enumerate", parents=[common])
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--all", action="store_true", help="report every class, not only the survivors")
    p.set_defaults(func=cmd_enumerate)
    p = g.add_parser("smooth", parents=[common]); p.add_argument("--nu", type=int, required=True)
    p.set_defaults(func=cmd_smooth)
    p = g.add_parser("ordinary", parents=[common]); p.add_argument("--json", required=True)
    p.set_defaults(func=cmd_ordinary)
    p = g.add_parser("dims", parents=[common]); p.add_argument("--nu", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    g = groups.add_parser("segre").add_subparsers(dest="command", required=True)
    p = g.add_parser("branch", parents=[common]); p.add_argument("--surface", required=True)
    p.set_defaults(func=cmd_branch)
    p = g.add_parser("verify", parents=[common])
    p.add_argument("--curve", required=True, help="branch curve polynomial JSON")
    p.add_argument("--cycle", required=True, help="point cycle JSON")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--hint", action="append", help="candidate L1 polynomial JSON (repeatable)")
    p.set_defaults(func=cmd_verify)
    p = g.add_parser("cubic-demo", parents=[common])
    p.add_argument("--input", default="cubic_pipeline.json")
    p.set_defaults(func=cmd_cubic_demo)

    g = groups.add_parser("monodromy").add_subparsers(dest="command", required=True)
    p = g.add_parser("enumerate", parents=[common])
    p.add_argument("--presentation", required=True)
    p.add_argument("--nu", type=int, nargs="+", required=True)
    p.add_argument("--locals", help="local conditions JSON")
    p.add_argument("--no-transitive", action="store_true")
    p.set_defaults(func=cmd_monodromy)

    g = groups.add_parser("patchwork").add_subparsers(dest="command", required=True)
    p = g.add_parser("validate", parents=[common]); _subdivision_args(p); p.set_defaults(func=cmd_validate)
    p = g.add_parser("convexity", parents=[common]); _subdivision_args(p)
    p.add_argument("--method", choices=("simplex", "fourier-motzkin"), default="simplex")
    p.set_defaults(func=cmd_convexity)
    p = g.add_parser("c2", parents=[common]); _subdivision_args(p, blocks=True)
    p.add_argument("--sigma", help="side of T_d for the C2' variant, as x1,y1,x2,y2")
    p.set_defaults(func=cmd_c2)
    p = g.add_parser("targets", parents=[common])
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--constructed", help="d,c,n of a construction (default: tabulated)")
    p.set_defaults(func=cmd_targets)

    p = groups.add_parser("reproduce", parents=[common])
    p.add_argument("case", choices=sorted(SCRIPTS) + ["all"])
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (io.InputError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    rendered = _render(out, args.format)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
