"""Command-line interface.

Subcommands: ``bound`` (evaluate one bound at a point), ``surface``
(grid emission to CSV/JSON), ``oracle`` (exact combinatorial queries),
``mc`` (seeded random-code experiments), ``verify`` (invariant suites).

Exit codes: 0 success, 1 domain/usage error, 2 enumeration budget
exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .bounds import SRC_COMBINED_OUTER
from .errors import BudgetError, DomainError, InsdelBoundsError
from .montecarlo import McConfig, run_inner_bound_mc
from .optimizer import outer_bound_breakdown
from .oracles import (
    BallSpec,
    SmallCode,
    Word,
    check_list_decodable,
    containment_probability,
    enumerate_ball,
    lcs,
    reachable,
    supersequence_count_exact_length,
)
from .surface import BOUND_SOURCES, emit_surface, point_evaluator


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep argparse from calling sys.exit
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="insdel-bounds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate a single bound at one point")
    p_bound.add_argument("--q", type=int, required=True)
    p_bound.add_argument("--gamma", type=float, default=0.0)
    p_bound.add_argument("--delta", type=float, default=0.0)
    p_bound.add_argument("--source", choices=BOUND_SOURCES, required=True)
    p_bound.add_argument(
        "--breakdown", action="store_true", help="also print every applicable outer bound"
    )

    p_surface = sub.add_parser("surface", help="emit a bound surface grid to a file")
    p_surface.add_argument("--q", type=int, required=True)
    p_surface.add_argument("--bound", choices=BOUND_SOURCES, default=SRC_COMBINED_OUTER)
    p_surface.add_argument("--resolution", type=int, default=200)
    p_surface.add_argument("--format", choices=("csv", "json"), default="csv")
    p_surface.add_argument("--out", required=True)

    p_oracle = sub.add_parser("oracle", help="exact combinatorial oracles")
    orc = p_oracle.add_subparsers(dest="oracle_command", required=True)

    p_ball = orc.add_parser("ball", help="enumerate an insertion-deletion ball")
    p_ball.add_argument("--q", type=int, required=True)
    p_ball.add_argument("--center", required=True)
    p_ball.add_argument("--ins", type=int, default=0)
    p_ball.add_argument("--dels", type=int, default=0)
    p_ball.add_argument("--exact-length", action="store_true")
    p_ball.add_argument("--quiet", action="store_true", help="print only the size")

    p_count = orc.add_parser("count", help="exact-length supersequence count")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--t", type=int, required=True)
    p_count.add_argument("--q", type=int, required=True)

    p_lcs = orc.add_parser("lcs", help="longest common subsequence length")
    p_lcs.add_argument("--q", type=int, required=True)
    p_lcs.add_argument("--a", required=True)
    p_lcs.add_argument("--b", required=True)

    p_reach = orc.add_parser("reach", help="reachability under corruption budgets")
    p_reach.add_argument("--q", type=int, required=True)
    p_reach.add_argument("--x", required=True)
    p_reach.add_argument("--w", required=True)
    p_reach.add_argument("--max-del", type=int, required=True)
    p_reach.add_argument("--max-ins", type=int, required=True)

    p_prob = orc.add_parser("prob", help="subsequence containment probability")
    p_prob.add_argument("--q", type=int, required=True)
    p_prob.add_argument("--y", required=True)
    p_prob.add_argument("--m", type=int, required=True)

    p_check = orc.add_parser("check-code", help="exhaustive list-decodability check")
    p_check.add_argument("--q", type=int, required=True)
    p_check.add_argument("--codewords", required=True, help="comma-separated words")
    p_check.add_argument("--gamma", type=float, default=0.0)
    p_check.add_argument("--delta", type=float, default=0.0)
    p_check.add_argument("--list-cap", type=int, required=True)

    p_mc = sub.add_parser("mc", help="seeded random-code experiment")
    p_mc.add_argument("--config", help="JSON file with McConfig fields")
    p_mc.add_argument("--q", type=int)
    p_mc.add_argument("--n", type=int)
    p_mc.add_argument("--gamma", type=float, default=0.0)
    p_mc.add_argument("--delta", type=float, default=0.0)
    p_mc.add_argument("--rate-target", type=float)
    p_mc.add_argument("--list-cap", type=int)
    p_mc.add_argument("--trials", type=int, default=1)
    p_mc.add_argument("--seed", type=int, default=0)

    sub.add_parser("verify", help="run the invariant suites")
    return parser


def _run_bound(args: argparse.Namespace) -> int:
    value = point_evaluator(args.source)(args.q, args.gamma, args.delta)
    print(f"rate={value.rate:.12g} raw={value.raw:.12g} feasible={value.feasible} source={value.source}")
    if args.breakdown:
        for name, part in outer_bound_breakdown(args.q, args.gamma, args.delta).items():
            print(f"  {name}: rate={part.rate:.12g} raw={part.raw:.12g}")
    return 0


def _run_surface(args: argparse.Namespace) -> int:
    grid = emit_surface(args.q, args.bound, args.resolution, args.format, args.out)
    cells = len(grid.gamma_axis) * len(grid.delta_axis)
    print(f"wrote {cells} cells ({args.bound}, q={args.q}) to {args.out}")
    return 0


def _run_oracle(args: argparse.Namespace) -> int:
    cmd = args.oracle_command
    if cmd == "ball":
        spec = BallSpec(
            center=Word.parse(args.center, args.q),
            insertions=args.ins,
            deletions=args.dels,
            length_mode="exact-final-length" if args.exact_length else "all-lengths",
        )
        ball = enumerate_ball(spec)
        print(len(ball))
        if not args.quiet:
            for w in sorted(ball, key=lambda w: (len(w), w.symbols)):
                print(w.text())
    elif cmd == "count":
        print(supersequence_count_exact_length(args.n, args.t, args.q))
    elif cmd == "lcs":
        print(lcs(Word.parse(args.a, args.q), Word.parse(args.b, args.q)))
    elif cmd == "reach":
        hit = reachable(
            Word.parse(args.x, args.q), Word.parse(args.w, args.q), args.max_del, args.max_ins
        )
        print("true" if hit else "false")
    elif cmd == "prob":
        print(containment_probability(Word.parse(args.y, args.q), args.m))
    elif cmd == "check-code":
        code = SmallCode.from_texts(args.codewords.split(","), args.q)
        verdict = check_list_decodable(code, args.gamma, args.delta, args.list_cap)
        if verdict.ok:
            print("ok")
        else:
            offenders = ",".join(w.text() for w in verdict.decoded_list)
            print(f"violated witness={verdict.witness.text()!r} list=[{offenders}]")
    return 0


def _run_mc(args: argparse.Namespace) -> int:
    if args.config:
        with open(args.config) as handle:
            cfg = McConfig(**json.load(handle))
    else:
        missing = [k for k in ("q", "n", "rate_target", "list_cap") if getattr(args, k) is None]
        if missing:
            raise _UsageError(f"mc needs --config or flags; missing {', '.join(missing)}")
        cfg = McConfig(
            q=args.q,
            n=args.n,
            gamma=args.gamma,
            delta=args.delta,
            rate_target=args.rate_target,
            list_cap=args.list_cap,
            trials=args.trials,
            seed=args.seed,
        )
    report = run_inner_bound_mc(cfg)
    print(f"violations={report.violations}")
    print(f"max_list_size={report.max_list_size}")
    print(f"words_sampled={report.words_sampled}")
    print(f"trial_max_list_sizes={','.join(str(v) for v in report.trial_max_list_sizes)}")
    return 0


def cli_dispatch(argv: list[str] | None = None) -> int:
    """Parse arguments, run the chosen subcommand, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "bound":
            return _run_bound(args)
        if args.command == "surface":
            return _run_surface(args)
        if args.command == "oracle":
            return _run_oracle(args)
        if args.command == "mc":
            return _run_mc(args)
        if args.command == "verify":
            failures = verify_mod.run_all(verbose=True)
            if failures:
                print(f"{failures} check(s) failed", file=sys.stderr)
                return 3
            return 0
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, InsdelBoundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_dispatch())
