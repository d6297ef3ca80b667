"""Command-line front end.

Three subcommands:

  vgroup  -- compute one group, optionally by every method with an
             AGREE/DISAGREE verdict;
  table   -- exponent tables over a range of odd m, optionally checked
             against the reference residue formulas and rendered to a
             figure;
  verify  -- run the verification suites (cross-method agreement,
             identity grids, duality on seeded random matrices).

stdout carries data; diagnostics go to stderr.  Exit codes: 0 success,
1 verified mismatch or counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time

from . import groups
from .adams import SP, SPIN, V, VTILDE
from .groups import ALGORITHM, CLOSED, METHODS, ORACLE, RELATIONS, WINDOWED, VGroupResult, esp
from .identities import run_identity_suite
from .intlinalg import IntMatrix, cokernel, qz_kernel


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vone",
        description="Exact v-group computations for Sp(n) and Spin(2n+1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_vgroup = sub.add_parser("vgroup", help="compute a single group")
    p_vgroup.add_argument("--family", required=True, choices=[SP, SPIN])
    p_vgroup.add_argument("--n", required=True, type=int)
    p_vgroup.add_argument("--m", required=True, type=int)
    p_vgroup.add_argument(
        "--method", default=ORACLE, choices=[CLOSED, RELATIONS, ALGORITHM, ORACLE, "all"]
    )
    p_vgroup.add_argument("--variant", default=V, choices=[V, VTILDE])
    p_vgroup.add_argument("--format", default="text", choices=["json", "csv", "text"])
    p_vgroup.add_argument("--timing", action="store_true", help="include wall-clock timings")
    p_vgroup.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    p_vgroup.set_defaults(handler=cmd_vgroup)

    p_table = sub.add_parser("table", help="exponent table over a range of odd m")
    p_table.add_argument("--n", required=True, type=int)
    p_table.add_argument("--m-start", required=True, type=int)
    p_table.add_argument("--m-end", required=True, type=int)
    p_table.add_argument(
        "--check",
        action="store_true",
        help="compare rows against the reference residue formulas (n = 4, 5, 6)",
    )
    p_table.add_argument("--format", default="csv", choices=["json", "csv", "text"])
    p_table.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    p_table.add_argument("--plot", default=None, metavar="FILE", help="render the columns to FILE (png)")
    p_table.set_defaults(handler=cmd_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=["cross", "identities", "duality", "all"])
    p_verify.add_argument("--max-n", type=int, default=8)
    p_verify.add_argument("--m-span", type=int, default=64)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _record(result: VGroupResult, timing: float | None = None) -> dict:
    exps = list(result.group.exponents)
    rec = {
        "family": result.family,
        "n": result.n,
        "m": result.m,
        "variant": result.variant,
        "method": result.method,
        "two_exponents": exps,
        "invariant_factors": [1 << e for e in reversed(exps)],
    }
    if timing is not None:
        rec["timing_seconds"] = round(timing, 6)
    return rec


def _csv_text(records: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for rec in records:
        row = []
        for col in columns:
            val = rec.get(col, "")
            if isinstance(val, list):
                val = ";".join(str(x) for x in val)
            row.append(val)
        writer.writerow(row)
    return buf.getvalue()


_VGROUP_COLUMNS = ["family", "n", "m", "variant", "method", "two_exponents", "invariant_factors"]


def cmd_vgroup(args) -> int:
    methods = [args.method]
    if args.method == "all":
        methods = [CLOSED, ORACLE] if args.family == SP else list(METHODS)
    records = []
    group_by_method = {}
    for method in methods:
        t0 = time.perf_counter()
        result = groups.v_group(args.family, args.n, args.m, method, args.variant)
        dt = time.perf_counter() - t0
        group_by_method[method] = result.group
        records.append(_record(result, dt if args.timing else None))
    agree = len({g for g in group_by_method.values()}) == 1

    if args.format == "json":
        payload: dict | list = records if args.method != "all" else {
            "records": records,
            "verdict": "AGREE" if agree else "DISAGREE",
        }
        text = json.dumps(payload, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _csv_text(records, _VGROUP_COLUMNS)
        if args.method == "all":
            text += f"# verdict: {'AGREE' if agree else 'DISAGREE'}\n"
    else:
        lines = []
        for rec in records:
            exps = ",".join(str(e) for e in rec["two_exponents"]) or "trivial"
            group = " + ".join(f"Z/{f}" for f in reversed(rec["invariant_factors"])) or "0"
            timing = f"  ({rec['timing_seconds']}s)" if "timing_seconds" in rec else ""
            lines.append(
                f"{rec['family']} n={rec['n']} m={rec['m']} {rec['variant']} "
                f"[{rec['method']}]: {group} (exponents {exps}){timing}"
            )
        if args.method == "all":
            lines.append("AGREE" if agree else "DISAGREE")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if agree else 1


def _expected_row(n: int, m: int):
    """Published-formula row (esp, e1, e2) where available; esp is None at n=4."""
    if n in (5, 6):
        return groups.residue_row(n, m)
    if n == 4:
        expected = groups.v_spin_closed(m, 4).exponents
        return (None, expected[0], expected[1])
    raise ValueError(f"--check supports n in (4, 5, 6), not n={n}")


def cmd_table(args) -> int:
    if args.m_start % 2 == 0 or args.m_end % 2 == 0:
        print("note: even m are skipped (groups are Z/2 + Z/2 there)", file=sys.stderr)
    rows = groups.table(args.n, args.m_start, args.m_end)
    records = [{"m": r.m, "esp": r.esp, "e1": r.e1, "e2": r.e2} for r in rows]

    mismatches = []
    if args.check:
        for r in rows:
            expected = _expected_row(args.n, r.m)
            got = (r.esp if expected[0] is not None else None, r.e1, r.e2)
            if got != expected:
                mismatches.append((r.m, expected, got))
        for m, want, got in mismatches:
            print(f"mismatch at m={m}: formula {want}, computed {got}", file=sys.stderr)

    if args.format == "json":
        text = json.dumps(records, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _csv_text(records, ["m", "esp", "e1", "e2"])
    else:
        header = f"{'m':>5} {'esp':>4} {'e1':>3} {'e2':>3}"
        body = "\n".join(f"{r.m:>5} {r.esp:>4} {r.e1:>3} {r.e2:>3}" for r in rows)
        text = header + "\n" + body + "\n"
    _emit(text, args.out)

    if args.plot:
        _render_table_plot(rows, args.n, args.plot)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 1 if mismatches else 0


def _render_table_plot(rows, n: int, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ms = [r.m for r in rows]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.step(ms, [r.esp for r in rows], where="mid", label="esp", lw=1.2)
    ax.step(ms, [r.e1 for r in rows], where="mid", label="e1", lw=1.2)
    ax.step(ms, [r.e2 for r in rows], where="mid", label="e2", lw=1.2)
    ax.set_xlabel("m (odd)")
    ax.set_ylabel("exponent of 2")
    ax.set_title(f"2-primary exponents, n={n}")
    ax.legend(loc="upper right")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _duality_suite(seed: int, count: int = 500) -> tuple[int, str | None]:
    rng = random.Random(seed)
    for case in range(count):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        mat = IntMatrix([[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)])
        coker = cokernel(mat)
        kernel = qz_kernel(mat)
        if kernel.invariant_factors != coker.invariant_factors:
            return case + 1, f"finite parts differ for {mat!r}: {kernel} vs {coker}"
        if kernel.free_rank != coker.free_rank:
            return case + 1, f"Q/Z count {kernel.free_rank} != free rank {coker.free_rank} for {mat!r}"
    return count, None


def _cross_suite(max_n: int, m_span: int) -> tuple[int, str | None]:
    cells = 0
    for n in range(3, max_n + 1):
        for m in range(n * n + 1, n * n + m_span + 1):
            if m % 2 == 0:
                continue
            cells += 1
            results = {
                method: groups.v_group(SPIN, n, m, method).group
                for method in (CLOSED, RELATIONS, ALGORITHM, ORACLE)
            }
            if len(set(results.values())) != 1:
                detail = ", ".join(f"{k}={v}" for k, v in results.items())
                return cells, f"methods disagree at (m={m}, n={n}): {detail}"
            if esp(m, n) != esp(m, n, method=WINDOWED):
                return cells, f"esp oracle != windowed at (m={m}, n={n})"
    return cells, None


def cmd_verify(args) -> int:
    failures = 0
    suites = ["cross", "identities", "duality"] if args.suite == "all" else [args.suite]
    for suite in suites:
        if suite == "duality":
            cases, bad = _duality_suite(args.seed)
            _print_suite_line("duality", f"seed={args.seed}", cases, bad)
            failures += bad is not None
        elif suite == "identities":
            for report in run_identity_suite():
                print(report)
                failures += not report.passed
        elif suite == "cross":
            cases, bad = _cross_suite(args.max_n, args.m_span)
            _print_suite_line("cross-method", f"n<={args.max_n}, span {args.m_span}", cases, bad)
            failures += bad is not None
    return 1 if failures else 0


def _print_suite_line(name: str, grid: str, cases: int, bad: str | None) -> None:
    if bad is None:
        print(f"PASS {name} ({grid}; {cases} cases)")
    else:
        print(f"FAIL {name} ({grid}): {bad}")


if __name__ == "__main__":
    sys.exit(main())
