"""Command-line surface: generate, verify, decide, seed, oracle, crosscheck, sweep.

Exit codes: 0 success, 1 internal error or parse failure, 2 infeasible
parameters, 3 verification failure or cross-check disagreement, 4 search
budget cutoff, 64 bad usage.  Output is deterministic: no timestamps, no
randomness, byte-identical across runs for fixed arguments.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import formats
from .core import Params, verify_smr
from .dispatch import InfeasibleError, RouteTrace, construct, feasibility
from .oracle import DEFAULT_BUDGET, cross_check, decide
from .seeds import SEED_IDS, seed

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFY_FAILED = 3
EXIT_CUTOFF = 4
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the taxonomy here wants 64
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("grid", "json", "csv"), default="grid", dest="format"
    )
    p.add_argument(
        "--grid", action="store_const", const="grid", dest="format",
        help="shorthand for --format grid",
    )
    p.add_argument(
        "--json", action="store_const", const="json", dest="format",
        help="shorthand for --format json",
    )
    p.add_argument(
        "--csv", action="store_const", const="csv", dest="format",
        help="shorthand for --format csv",
    )


def _render(a, p: Params, fmt: str) -> str:
    if fmt == "json":
        return formats.to_json(a, p)
    if fmt == "csv":
        return formats.to_csv(a, p)
    return formats.to_grid(a)


def _render_trace(trace: RouteTrace) -> str:
    return "".join(f"# trace: {step}\n" for step in trace.steps)


def _default_budget() -> int:
    raw = os.environ.get("SMR_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"SMR_BUDGET must be an integer, got {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="smr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="construct an (m, n; r, 2) rectangle")
    p_gen.add_argument("m", type=int)
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("r", type=int)
    _add_format_flags(p_gen)
    p_gen.add_argument(
        "--trace", action="store_true", help="append the applied operator sequence"
    )

    p_verify = sub.add_parser("verify", help="check a serialized array against the axioms")
    p_verify.add_argument("path")

    p_decide = sub.add_parser("decide", help="print the feasibility verdict")
    p_decide.add_argument("m", type=int)
    p_decide.add_argument("n", type=int)
    p_decide.add_argument("r", type=int)

    p_seed = sub.add_parser("seed", help="print a catalog seed")
    p_seed.add_argument("id", metavar="id")
    _add_format_flags(p_seed)

    p_oracle = sub.add_parser("oracle", help="decide existence by exhaustive search")
    p_oracle.add_argument("m", type=int)
    p_oracle.add_argument("r", type=int)
    p_oracle.add_argument("--budget", type=int, default=None)
    p_oracle.add_argument("--witness", action="store_true")
    _add_format_flags(p_oracle)

    p_cross = sub.add_parser(
        "crosscheck", help="compare exhaustive search against the existence criterion"
    )
    p_cross.add_argument("--max-m", type=int, required=True)
    p_cross.add_argument("--max-r", type=int, required=True)
    p_cross.add_argument("--budget", type=int, default=None)

    p_sweep = sub.add_parser(
        "sweep", help="construct and verify every feasible point in a parameter grid"
    )
    p_sweep.add_argument("--max-m", type=int, required=True)
    p_sweep.add_argument("--max-r", type=int, required=True)

    return parser


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        array, trace = construct(args.m, args.n, args.r)
    except InfeasibleError as exc:
        print(str(exc.verdict), file=sys.stderr)
        return EXIT_INFEASIBLE
    params = Params(args.m, args.n, args.r, 2)
    out = _render(array, params, args.format)
    if args.trace:
        out += _render_trace(trace)
    sys.stdout.write(out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    try:
        if text.lstrip().startswith("{"):
            array, params = formats.from_json(text)
        else:
            array, params = formats.from_csv(text)
    except (formats.ParseError, ValueError) as exc:
        print(f"parse failure in {args.path}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    report = verify_smr(array, params)
    print(report)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_decide(args: argparse.Namespace) -> int:
    verdict = feasibility(args.m, args.n, args.r)
    print(verdict)
    return EXIT_OK if verdict.feasible else EXIT_INFEASIBLE


def _cmd_seed(args: argparse.Namespace) -> int:
    try:
        array, params = seed(args.id)
    except KeyError:
        print(
            f"unknown seed id {args.id!r}; known: {', '.join(SEED_IDS)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    sys.stdout.write(_render(array, params, args.format))
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    outcome = decide(args.m, args.r, budget)
    print(f"{outcome.status} (nodes: {outcome.nodes})")
    if outcome.status == "exists" and args.witness and outcome.witness is not None:
        params = Params(args.m, (args.m * args.r) // 2, args.r, 2)
        sys.stdout.write(_render(outcome.witness, params, args.format))
    if outcome.status == "cutoff":
        return EXIT_CUTOFF
    return EXIT_OK if outcome.status == "exists" else EXIT_INFEASIBLE


def _cmd_crosscheck(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    report = cross_check(args.max_m, args.max_r, budget)
    print(report)
    if report.disagreements:
        return EXIT_VERIFY_FAILED
    if report.cutoffs:
        return EXIT_CUTOFF
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    built = 0
    rejected = 0
    failures: list[str] = []
    for m in range(2, args.max_m + 1):
        for r in range(3, args.max_r + 1):
            n = r if m == 2 else (m * r) // 2
            verdict = feasibility(m, n, r)
            if verdict.feasible:
                try:
                    array, _ = construct(m, n, r)
                    report = verify_smr(array, Params(m, n, r, 2))
                except Exception as exc:  # constructions must never fail here
                    failures.append(f"construct({m},{n},{r}) raised {exc!r}")
                    continue
                if report.ok:
                    built += 1
                else:
                    failures.append(f"construct({m},{n},{r}) fails verification: {report}")
            else:
                try:
                    construct(m, n, r)
                    failures.append(f"construct({m},{n},{r}) succeeded on infeasible input")
                except InfeasibleError:
                    rejected += 1
    print(
        f"sweep m=2..{args.max_m} r=3..{args.max_r}: "
        f"{built} constructed and verified, {rejected} infeasible rejected"
    )
    if failures:
        for line in failures:
            print(f"FAIL: {line}")
        return EXIT_INTERNAL
    print("all pass")
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "decide": _cmd_decide,
    "seed": _cmd_seed,
    "oracle": _cmd_oracle,
    "crosscheck": _cmd_crosscheck,
    "sweep": _cmd_sweep,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
