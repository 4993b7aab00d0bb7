"""Command-line interface.

Exit codes: 0 success, 1 a cycle or check failed (or counts disagree),
2 bad parameters or an exceeded budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import perm as falling
from typing import List, Optional, TextIO

from . import counting, digraph, spectral
from .errors import BudgetExceeded, ParameterError, PermutationError
from .perm import format_cycle, is_universal_cycle, parse_cycle


def _budget(args) -> counting.TourBudget:
    return counting.TourBudget(max_arcs=args.max_arcs, max_count=args.max_count)


def _add_nk(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--n", type=int, required=required, help="alphabet size")
    p.add_argument("--k", type=int, required=required, help="window length")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-arcs", type=int, default=counting.TourBudget.max_arcs)
    p.add_argument("--max-count", type=int, default=counting.TourBudget.max_count)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucycle", description="Universal cycles for k-permutations of [n]."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count universal cycles")
    _add_nk(p)
    p.add_argument("--method", choices=counting.METHODS, default="all")
    p.add_argument("--max-vertices", type=int, default=counting.DEFAULT_MAX_VERTICES)
    _add_budget(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("generate", help="print one universal cycle")
    _add_nk(p)
    p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("validate", help="check cycles, one per line")
    _add_nk(p, required=False)
    p.add_argument("--file", type=argparse.FileType("r"), default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bruteforce", help="count (or list) cycles by exhaustive search")
    _add_nk(p)
    _add_budget(p)
    p.add_argument("--emit-cycles", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="check the spectral identities exactly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=list(spectral.CHECKS) + ["all"], default="all")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dump-digraph", help="print the transition digraph arc list")
    _add_nk(p)
    return parser


def _infer_nk(c) -> Optional[tuple]:
    if not c:
        return None
    n = max(c)
    for k in range(1, n):
        if falling(n, k) == len(c):
            return n, k
    return None


def _validate(args, out: TextIO, stdin: TextIO) -> int:
    if (args.n is None) != (args.k is None):
        raise ParameterError("give both --n and --k, or neither to infer them per line")
    src = args.file if args.file is not None else stdin
    all_ok = True
    records = []
    for lineno, line in enumerate(src, start=1):
        if not line.strip():
            continue
        try:
            c = parse_cycle(line)
        except PermutationError as exc:
            ok, reason, nk = False, str(exc), None
        else:
            nk = (args.n, args.k) if args.n is not None else _infer_nk(c)
            if nk is None:
                ok, reason = False, f"cannot infer n, k from length {len(c)}"
            else:
                verdict = is_universal_cycle(c, *nk)
                ok, reason = verdict.ok, verdict.reason
        all_ok &= ok
        records.append({"line": lineno, "valid": ok, "reason": reason,
                        "n": nk[0] if nk else None, "k": nk[1] if nk else None})
    if args.json:
        json.dump({"all_valid": all_ok, "lines": records}, out, indent=2)
        out.write("\n")
    else:
        for r in records:
            tail = "ok" if r["valid"] else f"invalid: {r['reason']}"
            out.write(f"line {r['line']}: {tail}\n")
    return 0 if all_ok else 1


def _count(args, out: TextIO) -> int:
    report = counting.count_report(args.n, args.k, args.method, _budget(args), args.max_vertices)
    if args.json:
        json.dump(report.to_json(), out, indent=2)
        out.write("\n")
    else:
        data = report.to_json()
        for key in ("closed_form", "matrix_tree", "brute_force"):
            out.write(f"{key}: {data[key] if data[key] is not None else '-'}\n")
        out.write(f"agree: {str(report.agree).lower()}\n")
    return 0 if report.agree else 1


def _bruteforce(args, out: TextIO) -> int:
    budget = _budget(args)
    if args.emit_cycles:
        for c in counting.enumerate_all(args.n, args.k, budget):
            out.write(format_cycle(c) + "\n")
        return 0
    out.write(f"{counting.count_bruteforce(args.n, args.k, budget, workers=args.workers)}\n")
    return 0


def _verify(args, out: TextIO) -> int:
    results = spectral.run_checks(args.n, args.check)
    ok = all(results)
    if args.json:
        json.dump({"n": args.n, "passed": ok, "checks": [r.to_json() for r in results]}, out, indent=2)
        out.write("\n")
    else:
        for r in results:
            line = f"{r.name} n={args.n}: {'PASS' if r.passed else 'FAIL'}"
            if r.counterexample:
                line += f" {r.counterexample}"
            out.write(line + "\n")
    return 0 if ok else 1


def run(argv: Optional[List[str]] = None, out: TextIO = None, stdin: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    args = build_parser().parse_args(argv)
    try:
        if args.command == "count":
            return _count(args, out)
        if args.command == "generate":
            out.write(format_cycle(counting.generate_cycle(args.n, args.k, args.seed)) + "\n")
            return 0
        if args.command == "validate":
            return _validate(args, out, stdin)
        if args.command == "bruteforce":
            return _bruteforce(args, out)
        if args.command == "verify":
            return _verify(args, out)
        if args.command == "dump-digraph":
            out.write(digraph.dump(digraph.build(args.n, args.k)) + "\n")
            return 0
    except BudgetExceeded as exc:
        extra = f" (counted at least {exc.lower_bound})" if exc.lower_bound else ""
        print(f"ucycle: budget exceeded: {exc}{extra}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"ucycle: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
