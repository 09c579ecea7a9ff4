"""Batch command-line front end.

Commands: betti, cover-homology, quotient-homology, wedge-homology, verify,
export.  Reports go to stdout or ``--out`` as JSON (canonical), CSV, or
aligned text.  Identical argv (including --seed) produces byte-identical
output, independently of --threads.

Exit codes: 0 all checks pass / report produced, 1 a verification check
failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .complexes import (
    build_cover_complex,
    build_Q_complex,
    build_wedge_complex,
    base_change,
    export_json,
    export_text,
)
from .homology import (
    DEFAULT_TRIALS,
    FAST_PRIME,
    VERIFY_PRIME,
    DegreeEntry,
    HomologyReport,
    betti_symmetric_power,
    generic_homology,
    integer_homology,
)
from .verify import SUITE_ORDER, run_suite


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympow",
        description="Chain complexes and homology of symmetric powers of surfaces and their covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, need_k=True):
        p.add_argument("--genus", type=int, help="genus g of the surface")
        p.add_argument("--arity", type=int, help="arity n of the wedge of circles")
        p.add_argument("--k", type=int, required=need_k, help="symmetric-power degree / truncation")
        p.add_argument("--N", type=int, default=None, help="finite cover order for the snf method")
        p.add_argument("--method", choices=["generic", "snf", "count"], default="generic")
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--prime", type=int, default=None)
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--threads", type=int, default=os.cpu_count(),
                       help="worker bound for specialization trials (does not affect output)")

    p = sub.add_parser("betti", help="Betti numbers of the k-th symmetric power")
    add_common(p)

    p = sub.add_parser("cover-homology", help="homology of the universal-cover complex")
    add_common(p)

    p = sub.add_parser("quotient-homology", help="cohomology of the truncated lam-multiplication complex")
    add_common(p)

    p = sub.add_parser("wedge-homology", help="homology of the truncated wedge complex")
    add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    add_common(p, need_k=False)
    p.add_argument("--suite", required=True, choices=SUITE_ORDER + ["all"])

    p = sub.add_parser("export", help="emit a complex in the SYMPOW-COMPLEX v1 format")
    p.add_argument("--genus", type=int)
    p.add_argument("--arity", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--case", required=True, choices=["cover", "wedge", "q"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", type=str, default=None)
    return parser


def _require_genus(args) -> int:
    if args.genus is None:
        raise UsageError("--genus is required for this command")
    if args.genus < 1:
        raise UsageError("--genus must be >= 1")
    return args.genus


def _require_arity(args) -> int:
    if args.arity is None:
        raise UsageError("--arity is required for this command")
    if args.arity < 1:
        raise UsageError("--arity must be >= 1")
    return args.arity


def _validate(args) -> None:
    for name in ("k", "N", "trials", "prime", "threads"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be nonnegative")
    if getattr(args, "trials", 1) is not None and getattr(args, "trials", 1) < 1:
        raise UsageError("--trials must be >= 1")
    if getattr(args, "N", None) is not None and args.N < 1:
        raise UsageError("--N must be >= 1")


def _homology_report(args, kind: str) -> HomologyReport:
    prime = args.prime
    if kind == "cover":
        g = _require_genus(args)
        complex_ = build_cover_complex(g, args.k)
    elif kind == "wedge":
        n = _require_arity(args)
        if args.k > n:
            raise UsageError(f"--k must be <= arity {n} (no cells beyond degree n)")
        complex_ = build_wedge_complex(n, args.k)
    else:
        g = _require_genus(args)
        if args.k < 1:
            raise UsageError("--k must be >= 1 for the quotient complex")
        complex_ = build_Q_complex(g, args.k)

    if args.method == "generic":
        rep = generic_homology(complex_, args.trials, args.seed,
                               prime if prime is not None else FAST_PRIME,
                               threads=args.threads)
    elif args.method == "snf":
        rep = integer_homology(base_change(complex_, args.N if args.N is not None else 1))
    else:
        if kind != "cover":
            raise UsageError("--method count applies to cover-homology and betti only")
        g = _require_genus(args)
        betti = betti_symmetric_power(g, args.k)
        rep = HomologyReport("surface-cover", {"g": g, "k": args.k}, "betti-count",
                             [DegreeEntry(d, b) for d, b in enumerate(betti)])
    if kind == "q":
        # relabel stored chain degrees as cochain positions
        top = complex_.params["top"]
        entries = [DegreeEntry(top - e.degree, e.rank, e.torsion) for e in rep.entries]
        entries.sort(key=lambda e: e.degree)
        rep.entries = entries
    return rep


def _render_homology(rep: HomologyReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json_dict(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "rank", "torsion"])
        for e in rep.entries:
            writer.writerow([e.degree, e.rank, ";".join(map(str, e.torsion))])
        return buf.getvalue()
    lines = [f"case={rep.case} method={rep.method} params={rep.params}"]
    lines.append(f"{'degree':>6}  {'rank':>6}  torsion")
    for e in rep.entries:
        torsion = ",".join(map(str, e.torsion)) or "-"
        lines.append(f"{e.degree:>6}  {e.rank:>6}  {torsion}")
    lines.append(f"euler = {rep.euler}")
    return "\n".join(lines) + "\n"


def _render_verify(reports, fmt: str) -> str:
    if fmt == "json":
        if len(reports) == 1:
            payload = reports[0].to_json_dict()
        else:
            payload = {"suites": [r.to_json_dict() for r in reports],
                       "pass": all(r.passed for r in reports)}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "check", "pass", "detail"])
        for r in reports:
            for c in r.checks:
                writer.writerow([r.suite, c.name, "pass" if c.passed else "FAIL", c.detail])
        return buf.getvalue()
    lines = []
    for r in reports:
        lines.append(f"suite {r.suite} params={r.params}")
        for c in r.checks:
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        lines.append(f"  => {'pass' if r.passed else 'FAIL'}")
    lines.append("all suites pass" if all(r.passed for r in reports) else "FAILURES present")
    return "\n".join(lines) + "\n"


def run(argv: list[str]) -> tuple[int, str, str | None]:
    """Parse argv and produce (exit_code, report_text, out_path); no I/O."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a message to stderr
        return (2 if exc.code else 0), "", None
    out = getattr(args, "out", None)
    try:
        _validate(args)
        if args.command == "betti":
            g = _require_genus(args)
            betti = betti_symmetric_power(g, args.k)
            rep = HomologyReport("surface-cover", {"g": g, "k": args.k}, "betti-count",
                                 [DegreeEntry(d, b) for d, b in enumerate(betti)])
            return 0, _render_homology(rep, args.format), out
        if args.command in ("cover-homology", "wedge-homology", "quotient-homology"):
            kind = {"cover-homology": "cover", "wedge-homology": "wedge",
                    "quotient-homology": "q"}[args.command]
            rep = _homology_report(args, kind)
            return 0, _render_homology(rep, args.format), out
        if args.command == "verify":
            prime = args.prime if args.prime is not None else VERIFY_PRIME
            n_list = (1, args.N) if args.N not in (None, 1) else (1, 2)
            reports = run_suite(args.suite, g=args.genus, n=args.arity, k=args.k,
                                trials=args.trials, seed=args.seed, prime=prime,
                                N_list=n_list)
            code = 0 if all(r.passed for r in reports) else 1
            return code, _render_verify(reports, args.format), out
        if args.command == "export":
            if args.case == "cover":
                complex_ = build_cover_complex(_require_genus(args), args.k)
            elif args.case == "wedge":
                n = _require_arity(args)
                if args.k > n:
                    raise UsageError(f"--k must be <= arity {n}")
                complex_ = build_wedge_complex(n, args.k)
            else:
                if args.k < 1:
                    raise UsageError("--k must be >= 1 for the quotient complex")
                complex_ = build_Q_complex(_require_genus(args), args.k)
            text = export_text(complex_) if args.format == "text" else export_json(complex_)
            return 0, text, out
        raise UsageError(f"unknown command {args.command}")
    except UsageError as exc:
        return 2, f"usage error: {exc}\n", None
    except ValueError as exc:
        return 2, f"usage error: {exc}\n", None


def main() -> None:
    code, text, out = run(sys.argv[1:])
    if code == 2:
        sys.stderr.write(text)
    elif out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    raise SystemExit(code)
