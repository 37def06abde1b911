"""Command-line surface: single queries, verification suites, range scans.

Conventions shared by all subcommands:

* rationals print exactly as "p/q" (plain "p" for integers), never decimal;
* exit code 0 means every verified equality held; a violated equality
  exits 1.  "FLAG:" lines report findings (claim/computation mismatches)
  and never affect the exit code;
* scans partition work across --jobs workers (default from LEFPATH_JOBS)
  and merge results in key order, so output bytes are identical for any
  worker count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import algebra, catalan, hilbert, lattice, lefschetz, partitions
from .algebra import format_rational
from .exact import ExactMatrix

SCHEMA_VERSION = 1


def _format_matrix(matrix: ExactMatrix) -> str:
    return "[" + "; ".join(
        " ".join(format_rational(e) for e in row) for row in matrix.rows
    ) + "]"


def _parse_range(text: str) -> range:
    """"2..20" -> range(2, 21); "5" -> range(5, 6)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(text)
    return range(value, value + 1)


def _default_jobs() -> int:
    return max(1, int(os.environ.get("LEFPATH_JOBS", "1")))


def _map_tasks(func, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [func(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, tasks))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


# -- hilbert ------------------------------------------------------------------


def cmd_hilbert(args) -> int:
    h = hilbert.hilbert_series(args.m, args.n)
    if args.closed_form:
        if args.n != 2:
            print("error: --closed-form is only defined for n = 2", file=sys.stderr)
            return 2
        closed = tuple(
            hilbert.hilbert_m2_closed(args.m, i) for i in range(h.socle_degree + 1)
        )
        print(" ".join(str(c) for c in closed))
        if closed != h.coeffs:
            print(
                f"MISMATCH: closed form {closed} != series {h.coeffs}",
                file=sys.stderr,
            )
            return 1
        return 0
    print(" ".join(str(c) for c in h.coeffs))
    return 0


# -- poly ---------------------------------------------------------------------


def cmd_poly(args) -> int:
    relation = algebra.f_m(args.m)
    dual = algebra.dual_generator(args.m)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "poly",
            "inputs": {"m": args.m},
            "results": {
                "relation": relation.to_json_terms(),
                "dual_generator": dual.to_json_terms(),
            },
        }
        _emit(_json_dump(payload), args.output)
    else:
        _emit(
            f"relation: {relation.to_text()}\ndual generator: {dual.to_text()}\n",
            args.output,
        )
    return 0


# -- hessian ------------------------------------------------------------------


def cmd_hessian(args) -> int:
    point = (args.point[0], args.point[1]) if args.point else (1, 0)
    if args.paths:
        matrix = lattice.path_matrix(args.m, args.i)
    else:
        matrix = algebra.hessian(args.m, args.i, point)
    printed = False
    if args.det:
        print(format_rational(matrix.det()))
        printed = True
    if args.rank:
        print(matrix.rank())
        printed = True
    if not printed:
        print(_format_matrix(matrix))
    return 0


# -- lattice ------------------------------------------------------------------


def _nonvanishing_flag(verdict) -> Optional[str]:
    if verdict.nonvanishing_rule_agrees:
        return None
    return (
        f"FLAG: nonvanishing rule disagrees at (m,i)=({verdict.m},{verdict.i}): "
        f"det={verdict.det} but 2*h_i={2 * verdict.h} vs m={verdict.m}; "
        f"the rule (det != 0 <=> 2*h_i <= m) is only reliable for i <= m-1"
    )


def cmd_lattice(args) -> int:
    m, i = args.m, args.i
    if args.action == "count":
        vs = lattice.vertex_sets(m, i)
        matrix = lattice.path_matrix(m, i)
        print(f"sources: {list(vs.sources)}")
        print(f"targets: {list(vs.targets)}")
        print(_format_matrix(matrix))
        return 0
    if args.action == "lgv-check":
        signed = lattice.lgv_signed_sum(m, i)
        det = lattice.path_matrix(m, i).det()
        ok = signed == det
        print(f"signed_sum={signed} det={format_rational(det)} {'OK' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    if args.action == "dvd-count":
        verdict = lattice.check_dvd_theorem(m, i, "enumerate")
        ok = bool(verdict.count_matches_det)
        flag = _nonvanishing_flag(verdict)
        suffix = " (nonvanishing rule mismatch flagged)" if flag else ""
        print(
            f"N={verdict.n_doubly} sign={verdict.predicted_sign:+d} "
            f"det={verdict.det} {'OK' if ok else 'MISMATCH'}{suffix}"
        )
        if flag:
            print(flag)
        return 0 if ok else 1
    if args.action == "involution-check":
        systems = list(lattice.enumerate_systems(m, i, "vertex_disjoint"))
        in_n = [s for s in systems if not s.is_doubly_vertex_disjoint()]
        ok = True
        for s in in_n:
            image = lattice.involution_phi(s)
            if (
                image.sign != -s.sign
                or not image.is_vertex_disjoint()
                or image.is_doubly_vertex_disjoint()
                or lattice.involution_phi(image) != s
            ):
                ok = False
                break
        signed = sum(s.sign for s in in_n)
        print(
            f"|N|={len(in_n)} signed_sum_over_N={signed} "
            f"involution={'OK' if ok and signed == 0 else 'MISMATCH'}"
        )
        return 0 if ok and signed == 0 else 1
    raise AssertionError(f"unhandled action {args.action}")


# -- report -------------------------------------------------------------------

_REPORT_COLUMNS = [
    "i",
    "h",
    "det_sign",
    "rank",
    "window_min",
    "sl",
    "hlp",
    "chrr_expected",
    "chrr",
    "hrr_expected",
    "hrr",
]


def _verdict_row(m: int, v: lefschetz.DegreeVerdict) -> list:
    return [
        m,
        v.i,
        v.h,
        v.det_sign,
        v.rank,
        v.window_min,
        v.sl_pass,
        v.hlp_pass,
        v.chrr_expected_sign,
        v.chrr_pass,
        v.hrr_expected_sign,
        v.hrr_pass,
    ]


def _report_table(report: lefschetz.PropertyReport) -> str:
    lines = [
        f"A(m,2) with m={report.m}: socle degree {report.socle_degree}",
        "  i  h  det  rank  window  SL   HLP  cHRR(exp)  cHRR  HRR(exp)  HRR",
    ]
    for v in report.verdicts:
        lines.append(
            f"{v.i:>3}{v.h:>3}{v.det_sign:>+5}{v.rank:>6}{v.window_min:>8}"
            f"{'yes' if v.sl_pass else 'no':>5}{'yes' if v.hlp_pass else 'no':>5}"
            f"{v.chrr_expected_sign:>+10}{'yes' if v.chrr_pass else 'no':>6}"
            f"{v.hrr_expected_sign:>+9}{'yes' if v.hrr_pass else 'no':>5}"
        )
    lines.append(
        f"summary: max_sl_degree={report.max_sl_degree} hlp={report.hlp} "
        f"max_chrr_degree={report.max_chrr_degree}"
    )
    for flag in report.claim_flags:
        if not flag.agrees:
            lines.append(
                f"FLAG: {flag.claim} | expected {flag.expected} | computed {flag.computed}"
            )
    return "\n".join(lines) + "\n"


def _report_json(report: lefschetz.PropertyReport) -> dict:
    return {
        "m": report.m,
        "socle_degree": report.socle_degree,
        "degrees": [
            dict(zip(_REPORT_COLUMNS, _verdict_row(report.m, v)[1:]))
            for v in report.verdicts
        ],
        "max_sl_degree": report.max_sl_degree,
        "hlp": report.hlp,
        "max_chrr_degree": report.max_chrr_degree,
        "flags": [
            {
                "claim": f.claim,
                "expected": f.expected,
                "computed": f.computed,
                "agrees": f.agrees,
            }
            for f in report.claim_flags
        ],
    }


def _verify_hessian_path_equivalence(m: int) -> bool:
    """Cross-check the two determinant routes wherever it is cheap."""
    top = hilbert.flo(3 * (m - 1))
    for i in range(top + 1):
        scale = math.factorial(3 * m - 3 - 2 * i)
        pm = lattice.path_matrix(m, i)
        if pm != algebra.hessian_closed_form(m, i).scaled(scale):
            return False
        if m <= 12 and pm != algebra.hessian(m, i, (1, 0)).scaled(scale):
            return False
    return True


def cmd_report(args) -> int:
    report = lefschetz.property_report(args.m)
    verified = _verify_hessian_path_equivalence(args.m)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "report",
            "inputs": {"m": args.m},
            "results": _report_json(report),
            "verified_hessian_equals_path_matrix": verified,
        }
        _emit(_json_dump(payload), args.output)
    else:
        text = _report_table(report)
        if not verified:
            text += "MISMATCH: pairing matrix != path matrix\n"
        _emit(text, args.output)
    return 0 if verified else 1


# -- scan ---------------------------------------------------------------------


def _scan_hilbert_task(key: tuple[int, int]) -> dict:
    m, n = key
    h = hilbert.hilbert_series(m, n)
    closed_ok = True
    if n == 2:
        closed_ok = h.coeffs == tuple(
            hilbert.hilbert_m2_closed(m, i) for i in range(h.socle_degree + 1)
        )
    return {
        "key": key,
        "rows": [
            [
                m,
                n,
                h.socle_degree,
                hilbert.is_unimodal(h.coeffs),
                hilbert.first_violation_index(h.coeffs),
            ]
        ],
        "ok": closed_ok,
        "flags": [],
    }


def _scan_lefschetz_task(key: tuple[int, int]) -> dict:
    (m, _) = key
    report = lefschetz.property_report(m)
    flags = [
        f"FLAG: m={m}: {f.claim} | expected {f.expected} | computed {f.computed}"
        for f in report.claim_flags
        if not f.agrees
    ]
    return {
        "key": key,
        "rows": [_verdict_row(m, v) for v in report.verdicts],
        "ok": _verify_hessian_path_equivalence(m),
        "flags": flags,
        "report": _report_json(report),
    }


def _scan_lattice_task(key: tuple[int, int]) -> dict:
    m, _ = key
    rows = []
    flags = []
    ok = True
    for i in range(hilbert.flo(3 * (m - 1)) + 1):
        mode = "enumerate" if m <= 6 else "det_only"
        verdict = lattice.check_dvd_theorem(m, i, mode)
        if mode == "enumerate":
            signed = lattice.lgv_signed_sum(m, i)
            ok &= signed == verdict.det
            ok &= bool(verdict.count_matches_det)
        rows.append(
            [
                m,
                i,
                verdict.h,
                verdict.det,
                verdict.predicted_sign,
                verdict.n_doubly,
                verdict.count_matches_det,
                verdict.nonvanishing_rule_agrees,
                verdict.in_rule_range,
            ]
        )
        flag = _nonvanishing_flag(verdict)
        if flag:
            flags.append(flag)
    return {"key": key, "rows": rows, "ok": ok, "flags": flags}


def _scan_catalan_task(key: tuple[int, int]) -> dict:
    m, _ = key
    order = 20
    power_ok = catalan.catalan_power(m, order) == catalan.catalan_series(order).pow(m)
    recip = catalan.catalan_power_reciprocal(m, order)
    head_ok = all(
        recip[n] == (-1) ** n * algebra.c_coeff(m, n)
        for n in range(min(order, hilbert.flo(m)) + 1)
    )
    identity_ok = all(
        catalan.check_identity_zero(m, i) for i in range(1, hilbert.flo(m) + 1)
    )
    return {
        "key": key,
        "rows": [[m, power_ok, head_ok, identity_ok]],
        "ok": power_ok and head_ok and identity_ok,
        "flags": [],
    }


def _scan_partitions_task(key: tuple[int, int]) -> dict:
    m, n = key
    count_ok = len(partitions.enumerate_restricted(m, n)) == m**n
    gf_ok = partitions.gf_matches_hilbert(m, n)
    degree_ok = partitions.degree_formula_matches_hessian(m) if (n == 2 and m >= 2) else None
    ok = count_ok and gf_ok and degree_ok is not False
    return {
        "key": key,
        "rows": [[m, n, count_ok, gf_ok, degree_ok]],
        "ok": ok,
        "flags": [],
    }


_SCAN_MODES = {
    "hilbert": (
        _scan_hilbert_task,
        ["m", "n", "socle_degree", "unimodal", "first_violation_index"],
        True,
    ),
    "lefschetz": (_scan_lefschetz_task, ["m"] + _REPORT_COLUMNS, False),
    "lattice": (
        _scan_lattice_task,
        [
            "m",
            "i",
            "h",
            "det",
            "predicted_sign",
            "n_doubly",
            "count_matches_det",
            "nonvanishing_rule_agrees",
            "in_rule_range",
        ],
        False,
    ),
    "catalan": (
        _scan_catalan_task,
        ["m", "power_closed_form_ok", "reciprocal_head_ok", "identity_zero_ok"],
        False,
    ),
    "partitions": (
        _scan_partitions_task,
        ["m", "n", "count_ok", "gf_matches_hilbert", "degree_formula_ok"],
        True,
    ),
}


def cmd_scan(args) -> int:
    task_func, header, uses_n = _SCAN_MODES[args.mode]
    m_range = _parse_range(args.m)
    n_range = _parse_range(args.n) if args.n else range(2, 3)
    if uses_n:
        keys = [(m, n) for m in m_range for n in n_range]
    else:
        keys = [(m, 0) for m in m_range]
    if not keys:
        print("error: empty scan range", file=sys.stderr)
        return 2
    results = _map_tasks(task_func, keys, args.jobs)

    rows = [row for result in results for row in result["rows"]]
    flags = [flag for result in results for flag in result["flags"]]
    all_ok = all(result["ok"] for result in results)

    if args.format == "csv":
        text = _csv_text(header, rows)
        _emit(text, args.output)
        for flag in flags:
            print(flag, file=sys.stderr)
    elif args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": "scan",
            "inputs": {"mode": args.mode, "m": args.m, "n": args.n, "jobs": args.jobs},
            "results": [dict(zip(header, row)) for row in rows],
            "flags": flags,
            "all_checks_pass": all_ok,
        }
        _emit(_json_dump(payload), args.output)
    else:
        widths = [
            max(len(str(h)), max((len(str(r[k])) for r in rows), default=0))
            for k, h in enumerate(header)
        ]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        for row in rows:
            lines.append(
                "  ".join(
                    str("" if v is None else v).ljust(w) for v, w in zip(row, widths)
                )
            )
        lines.extend(flags)
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if all_ok else 1


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefpath",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hilbert = sub.add_parser(
        "hilbert", help="Hilbert function of A(m, n), one coefficient per degree"
    )
    p_hilbert.add_argument("m", type=int)
    p_hilbert.add_argument("n", type=int)
    p_hilbert.add_argument(
        "--closed-form",
        action="store_true",
        help="use the n=2 closed form and cross-check it against the series",
    )
    p_hilbert.set_defaults(func=cmd_hilbert)

    p_poly = sub.add_parser(
        "poly", help="print the degree-m relation and the dual generator"
    )
    p_poly.add_argument("m", type=int)
    p_poly.add_argument("--format", choices=["text", "json"], default="text")
    p_poly.add_argument("--output", help="write to file instead of stdout")
    p_poly.set_defaults(func=cmd_poly)

    p_hessian = sub.add_parser(
        "hessian", help="degree-i pairing matrix of the dual generator"
    )
    p_hessian.add_argument("m", type=int)
    p_hessian.add_argument("i", type=int)
    p_hessian.add_argument("--det", action="store_true", help="print the determinant")
    p_hessian.add_argument("--rank", action="store_true", help="print the rank")
    p_hessian.add_argument(
        "--paths",
        action="store_true",
        help="print the integer path matrix ((3m-3-2i)! times the pairing matrix)",
    )
    p_hessian.add_argument(
        "--point",
        nargs=2,
        type=int,
        metavar=("C1", "C2"),
        help="evaluation point, default 1 0 (C2 != 0 is not a Lefschetz evaluation)",
    )
    p_hessian.set_defaults(func=cmd_hessian)

    p_lattice = sub.add_parser(
        "lattice", help="lattice-path checks for the degree-i matrix"
    )
    p_lattice.add_argument("m", type=int)
    p_lattice.add_argument("i", type=int)
    p_lattice.add_argument(
        "action",
        choices=["count", "lgv-check", "dvd-count", "involution-check"],
    )
    p_lattice.set_defaults(func=cmd_lattice)

    p_report = sub.add_parser(
        "report", help="per-degree Lefschetz verdicts for A(m, 2)"
    )
    p_report.add_argument("m", type=int)
    p_report.add_argument("--format", choices=["table", "json"], default="table")
    p_report.add_argument("--output", help="write to file instead of stdout")
    p_report.set_defaults(func=cmd_report)

    p_scan = sub.add_parser(
        "scan",
        help="range scans; CSV columns match the per-mode headers shown in --help",
        description=(
            "Scan modes and their CSV columns:\n"
            + "\n".join(
                f"  {mode}: {', '.join(header)}"
                for mode, (_, header, _) in _SCAN_MODES.items()
            )
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_scan.add_argument("--m", required=True, help="range A..B (inclusive) or single value")
    p_scan.add_argument("--n", help="range A..B for hilbert/partitions scans (default 2)")
    p_scan.add_argument(
        "--mode", required=True, choices=sorted(_SCAN_MODES.keys())
    )
    p_scan.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_scan.add_argument("--output", help="write to file instead of stdout")
    p_scan.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        help="worker count (default from LEFPATH_JOBS, else 1)",
    )
    p_scan.set_defaults(func=cmd_scan)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
