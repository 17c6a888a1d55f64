"""Command-line front door.

Commands: a2, c1-check, c1-gen, n1, suite.  Exit codes are a stable
contract: 0 pass, 1 check failed, 2 usage or parse error, 3 budget or
theorem anomaly.  Records go to stdout, diagnostics to stderr; the two
never mix on one stream.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import a2, n1, tiling
from .backend import BACKEND_NAME
from .errors import TheoremViolationError, TilingParseError
from .suite import SuiteConfig, run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ANOMALY = 3


def _fail_usage(message: str) -> int:
    print(f"imocheck: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_a2(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _fail_usage("a2 needs --n >= 1")
    seq = a2.build(args.n)
    for line in a2.render_lines(seq):
        print(line)
    if args.verify:
        rep = a2.verify(args.n)
        print(rep.record_line(), file=sys.stderr)
        return EXIT_PASS if rep.outcome else EXIT_FAIL
    return EXIT_PASS


def _format_rect(r: tiling.Rect) -> str:
    return "({},{},{},{})".format(*r)


def cmd_c1_check(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        return _fail_usage(f"cannot read {args.path}: {exc}")
    try:
        t = tiling.parse_tiling(text)
    except TilingParseError as exc:
        return _fail_usage(f"{args.path}: {exc}")
    problems = tiling.tiling_problems(t)
    if problems:
        for p in problems:
            print(f"invalid tiling: {p}", file=sys.stderr)
        return EXIT_FAIL
    try:
        rect, parity = tiling.witness(t)
    except TheoremViolationError as exc:
        print(f"theorem anomaly: {exc}", file=sys.stderr)
        return EXIT_ANOMALY
    ds = tiling.side_distances(rect, t.board)
    print(f"witness {_format_rect(rect)} ds={_format_rect(ds)} {parity.value}")
    return EXIT_PASS


def cmd_c1_gen(args: argparse.Namespace) -> int:
    if args.a < 1 or args.b < 1:
        return _fail_usage("board sides must be at least 1")
    if args.kind == "pinwheel":
        if args.a < 3 or args.b < 3:
            return _fail_usage("pinwheel needs both sides >= 3")
        rng = random.Random(args.seed)
        cx1, cx2 = sorted(rng.sample(range(1, args.a), 2))
        cy1, cy2 = sorted(rng.sample(range(1, args.b), 2))
        t = tiling.pinwheel(args.a, args.b, cx1, cx2, cy1, cy2)
    else:
        t = tiling.gen_guillotine(args.a, args.b, args.seed)
    sys.stdout.write(tiling.serialize_tiling(t))
    return EXIT_PASS


def cmd_n1(args: argparse.Namespace) -> int:
    if args.a0 <= 1:
        return _fail_usage("n1 needs --a0 > 1")
    if args.steps is not None:
        if args.steps < 0:
            return _fail_usage("--steps must be non-negative")
        print(" ".join(str(v) for v in n1.orbit(args.a0, args.steps)))
        return EXIT_PASS
    budget = args.budget if args.budget is not None else 4 * args.a0 + 1000
    if budget < 1:
        return _fail_usage("budget must be at least 1")
    trace = n1.classify(args.a0, budget)
    cls = trace.classification
    if cls is n1.OrbitClass.PERIODIC_MULT3:
        start, period = trace.cycle
        print(f"{cls.value} cycle=({start},{period})")
    elif cls is n1.OrbitClass.BUDGET_EXCEEDED:
        print(f"{cls.value} steps={trace.steps_used}")
        return EXIT_ANOMALY
    else:
        print(f"{cls.value} m={trace.mod2_index}")
    return EXIT_PASS


def cmd_suite(args: argparse.Namespace) -> int:
    cfg = SuiteConfig(
        a2_max_index=args.a2_max,
        c1_area_cap=args.c1_area_cap,
        c1_random_count=args.c1_random,
        c1_pinwheel_count=args.c1_pinwheels,
        n1_max_a0=args.n1_max,
        n1_budget_scale=args.n1_budget_scale,
        n1_budget_offset=args.n1_budget_offset,
        seed=args.seed,
        records=args.records,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        return _fail_usage(str(exc))
    print(f"backend={BACKEND_NAME}", file=sys.stderr)
    return run_suite(cfg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="imocheck",
        description="Exact desk-scale checks for IMO 2006 A2, 2017 C1 and 2017 N1.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("a2", help="print the A2 sequence exactly; optionally verify")
    p.add_argument("--n", type=int, required=True, help="last index to compute (>= 1)")
    p.add_argument("--verify", action="store_true",
                   help="check positivity, residuals and the closed form")
    p.set_defaults(func=cmd_a2)

    p = sub.add_parser("c1-check", help="validate a tiling file and print its witness")
    p.add_argument("path", help="tiling file (board/tile lines)")
    p.set_defaults(func=cmd_c1_check)

    p = sub.add_parser("c1-gen", help="generate a tiling file on stdout")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("guillotine", "pinwheel"), default="guillotine")
    p.set_defaults(func=cmd_c1_gen)

    p = sub.add_parser("n1", help="print an orbit prefix or classify a start value")
    p.add_argument("--a0", type=int, required=True, help="start value (> 1)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--steps", type=int, help="print a_0..a_steps")
    mode.add_argument("--classify", action="store_true",
                      help="classify the orbit within the budget")
    p.add_argument("--budget", type=int, default=None,
                   help="step budget for --classify (default 4*a0 + 1000)")
    p.set_defaults(func=cmd_n1)

    p = sub.add_parser("suite", help="run the full claim battery")
    p.add_argument("--records", action="store_true",
                   help="emit machine-readable CLAIM lines instead of human text")
    p.add_argument("--seed", type=int, default=SuiteConfig.seed)
    p.add_argument("--a2-max", type=int, default=SuiteConfig.a2_max_index)
    p.add_argument("--c1-area-cap", type=int, default=SuiteConfig.c1_area_cap)
    p.add_argument("--c1-random", type=int, default=SuiteConfig.c1_random_count)
    p.add_argument("--c1-pinwheels", type=int, default=SuiteConfig.c1_pinwheel_count)
    p.add_argument("--n1-max", type=int, default=SuiteConfig.n1_max_a0)
    p.add_argument("--n1-budget-scale", type=int, default=SuiteConfig.n1_budget_scale)
    p.add_argument("--n1-budget-offset", type=int, default=SuiteConfig.n1_budget_offset)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
