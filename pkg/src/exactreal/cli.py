"""Command line calculator.

Exit codes: 0 success, 1 expression parse error, 2 sign not certifiable
within budget, 3 indeterminate comparison, 4 internal invariant violation,
5 bad arguments or desk-scale limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import selftest
from .constructions import diagonalize, e_partial, liouville_check
from .errors import DeskScaleExceeded, InvariantViolation, SignUnknown
from .expr import ParseError, default_eval_budget, evaluate, parse, random_expression, to_real
from .interval import Interval, format_rational, parse_rational
from .real import Budget, Verdict, compare, embed
from .sequences import RealSequence, check_convergence

EXIT_PARSE, EXIT_SIGN, EXIT_INDETERMINATE, EXIT_INVARIANT, EXIT_USAGE = 1, 2, 3, 4, 5

COMPARE_BUDGET = Fraction(1, 10**40)
LIMIT_BUDGET = Fraction(1, 64)

SEQUENCES = {
    "1/n": lambda n: embed(Fraction(1, n)),
    "1-1/n": lambda n: embed(1 - Fraction(1, n)),
    "(-1)^n": lambda n: embed((-1) ** n),
    "factorial": lambda n: embed(e_partial(n)),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


_SCI_RE = re.compile(r"^(.+?)[eE]([+-]?\d+)$")


def budget_eps(text: str) -> Fraction:
    """Parse ``1/1000``, ``0.001`` or ``1e-30`` exactly."""
    try:
        m = _SCI_RE.match(text)
        value = (parse_rational(m.group(1)) * Fraction(10) ** int(m.group(2))
                 if m else parse_rational(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _nonneg_int(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exactreal", description="Exact real arithmetic calculator.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="print a certified decimal expansion")
    p.add_argument("--digits", type=_nonneg_int, default=10)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--budget-eps", type=budget_eps)
    group.add_argument("--budget-steps", type=_positive_int)
    p.add_argument("--json", action="store_true")
    p.add_argument("expr")

    p = sub.add_parser("compare", help="certify a < b or a > b")
    p.add_argument("--budget-eps", type=budget_eps, default=COMPARE_BUDGET)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("diag", help="diagonalize against random expressions")
    p.add_argument("--count", type=_positive_int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("liouville", help="check the Liouville inequality")
    p.add_argument("--check", type=_positive_int, required=True)
    p.add_argument("--max-n", type=_positive_int, default=4)

    p = sub.add_parser("limit", help="convergence evidence for a built-in sequence")
    p.add_argument("--horizon", type=_positive_int, default=100)
    p.add_argument("--budget-eps", type=budget_eps, default=LIMIT_BUDGET)
    p.add_argument("sequence", choices=sorted(SEQUENCES))
    p.add_argument("candidate")

    sub.add_parser("selftest", help="run the invariant suites")
    return parser


def _parse_expr(text):
    try:
        return parse(text)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        print(err.caret(), file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _cmd_eval(args, out):
    node = _parse_expr(args.expr)
    if args.budget_eps is not None:
        budget = Budget(min_epsilon=args.budget_eps)
    elif args.budget_steps is not None:
        budget = Budget(max_steps=args.budget_steps)
    else:
        budget = default_eval_budget(args.digits)
    result = evaluate(node, args.digits, budget)
    out(json.dumps(result.to_json()) if args.json else result.decimal)
    return 0


def _cmd_compare(args, out):
    left, right = _parse_expr(args.left), _parse_expr(args.right)
    budget = Budget(min_epsilon=args.budget_eps)
    c = compare(to_real(left, budget), to_real(right, budget), budget)
    if c.verdict is Verdict.INDETERMINATE:
        out(f"indeterminate gap<={format_rational(c.gap_bound)}")
        return EXIT_INDETERMINATE
    out(c.verdict.value)
    return 0


def _cmd_diag(args, out):
    rng = random.Random(args.seed)
    texts = [random_expression(rng, depth=2) for _ in range(args.count)]
    reals = [to_real(parse(t)) for t in texts]
    _, certs = diagonalize(lambda n: reals[n - 1], Interval(0, 1))
    for n in range(1, args.count + 1):
        cert = certs[n]
        out(json.dumps({"n": n, "expr": texts[n - 1],
                        "trap": cert.trap.to_json(), "avoided": cert.avoided.to_json()}))
    return 0


def _cmd_liouville(args, out):
    out(json.dumps(liouville_check(args.check, max_n=args.max_n).to_json()))
    return 0


def _cmd_limit(args, out):
    candidate = to_real(_parse_expr(args.candidate))
    seq = RealSequence(SEQUENCES[args.sequence], name=args.sequence)
    evidence = check_convergence(seq, candidate, args.horizon, Budget(min_epsilon=args.budget_eps))
    out(json.dumps(evidence.to_json()))
    return 0


def _cmd_selftest(args, out):
    return 0 if selftest.run(out=out) else EXIT_INVARIANT


COMMANDS = {
    "eval": _cmd_eval,
    "compare": _cmd_compare,
    "diag": _cmd_diag,
    "liouville": _cmd_liouville,
    "limit": _cmd_limit,
    "selftest": _cmd_selftest,
}


def main(argv=None, out=print) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE
    except SignUnknown as err:
        where = ""
        if err.span is not None:
            text = getattr(args, "expr", None) or ""
            start, end = err.span
            where = f" at {text[start:end]!r} (offset {start})" if text else f" (offset {start})"
        print(f"sign unknown{where}: {err}", file=sys.stderr)
        return EXIT_SIGN
    except DeskScaleExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as err:
        print(f"internal invariant violated: {err}", file=sys.stderr)
        return EXIT_INVARIANT


def run():
    sys.exit(main())
