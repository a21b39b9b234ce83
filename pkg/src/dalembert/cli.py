"""Command-line front end.

Every subcommand exits 0 when it ran (the verdict lives in the report) and 2
on bad usage or bad input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .groups import (
    GroupElement,
    negation,
    pullback_symbol,
    rational_boost,
    rational_rotation,
    transposition,
)
from .invariance import CanonicalForm, classify_operator, classify_symbol, witness_search
from .invariance.witness import DEFAULT_BUDGET
from .io import dumps, gen_instances, load_operator, load_symbol
from .io.generate import KINDS
from .operators import constant_symbol, format_operator, translation_witness
from .polynomial import Polynomial


class _ElementAction(argparse.Action):
    """Collects ``--boost/--rotation/--negate/--swap`` in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        steps = list(getattr(namespace, self.dest) or [])
        steps.append((option_string.lstrip("-"), list(values)))
        setattr(namespace, self.dest, steps)


def _fraction(text: str) -> Fraction:
    if "." in text:
        raise argparse.ArgumentTypeError(f"{text!r}: decimals are not exact; write fractions like 1/2")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_input(p: argparse.ArgumentParser, symbol: bool):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr", help="operator text, e.g. 'dt^2 - dx1^2'")
    src.add_argument("--file", help="file holding operator text or operator JSON")
    if symbol:
        src.add_argument("--symbol", help="symbol text in tau, xiK, e.g. 'tau^2 - xi1^2'")


def _add_common(p: argparse.ArgumentParser, fmt: str = "json"):
    p.add_argument("--space", choices=("minkowski", "euclidean"), default="minkowski")
    p.add_argument("--dim", type=_positive, help="spatial dimension n")
    p.add_argument("--format", choices=("json", "human"), default=fmt)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="witness search budget")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dalembert", description="Exact symmetry classification of constant-coefficient operators."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="translation, rotation/Lorentz and dilation verdicts")
    _add_common(p)
    _add_input(p, symbol=False)

    p = sub.add_parser("canonicalize", help="coefficients b_j of an invariant operator or symbol")
    _add_common(p)
    _add_input(p, symbol=True)

    p = sub.add_parser("witness", help="a concrete element that changes the symbol")
    _add_common(p)
    _add_input(p, symbol=True)

    p = sub.add_parser("act", help="pull a symbol back by a product of group elements")
    _add_common(p, fmt="human")
    p.add_argument("--symbol", required=True)
    for flag, nargs, metavar in (
        ("--boost", 2, ("I", "T")),
        ("--rotation", 3, ("I", "J", "T")),
        ("--negate", 1, ("K",)),
        ("--swap", 2, ("K", "L")),
    ):
        p.add_argument(flag, nargs=nargs, metavar=metavar, action=_ElementAction, dest="steps")

    p = sub.add_parser("gen", help="seeded random operators")
    _add_common(p)
    p.add_argument("--kind", choices=KINDS, default="invariant")
    p.add_argument("--order", type=int, default=4, help="upper bound m on the order")
    p.add_argument("--count", type=int, default=5)

    p = sub.add_parser("parse", help="echo the lowered operator (or symbol) as JSON")
    _add_common(p)
    _add_input(p, symbol=True)
    return parser


def _read_source(args) -> tuple[str, str]:
    """``(mode, text)`` where mode is operator or symbol."""
    if getattr(args, "symbol", None) is not None:
        return "symbol", args.symbol
    if args.expr is not None:
        return "operator", args.expr
    with open(args.file, encoding="utf-8") as fh:
        return "operator", fh.read()


def _symbol_of(args) -> Polynomial:
    mode, text = _read_source(args)
    if mode == "symbol":
        return load_symbol(text, args.dim)
    op = load_operator(text, args.dim)
    shift = translation_witness(op)
    if shift is not None:
        raise ValueError(
            f"operator has a non-constant coefficient at key {shift.key}; "
            "use 'classify' for variable-coefficient operators"
        )
    return constant_symbol(op)


def _cmd_classify(args) -> str:
    op = load_operator(_read_source(args)[1], args.dim)
    report = classify_operator(op, args.space, args.budget)
    return dumps(report.to_json()) if args.format == "json" else report.to_text()


def _cmd_canonicalize(args) -> str:
    p = _symbol_of(args)
    result = classify_symbol(p, args.space, args.budget)
    if isinstance(result, CanonicalForm):
        data = {"symbol": str(p), "invariant": True, **result.to_json()}
        text = str(result) + (" (zero symbol)" if result.is_zero else "")
    else:
        data = {"symbol": str(p), "invariant": False, "witness": result.to_json()}
        text = f"not invariant: {result.describe()}"
    return dumps(data) if args.format == "json" else text


def _cmd_witness(args) -> str:
    p = _symbol_of(args)
    if isinstance(classify_symbol(p, args.space, args.budget), CanonicalForm):
        data = {"symbol": str(p), "invariant": True, "witness": None}
        text = "invariant: no witness exists"
    else:
        w = witness_search(p, args.space, args.budget)
        data = {"symbol": str(p), "invariant": False, "witness": w.to_json()}
        text = w.describe()
    return dumps(data) if args.format == "json" else text


def _element(step: tuple[str, list[str]], n: int, space: str) -> GroupElement:
    kind, values = step
    if kind == "boost":
        if space != "minkowski":
            raise ValueError("boosts only exist in minkowski space")
        return rational_boost(n, int(values[0]), _fraction(values[1]))
    if kind == "rotation":
        return rational_rotation(n, int(values[0]), int(values[1]), _fraction(values[2]), space)
    if kind == "negate":
        return negation(n, [int(values[0])], space)
    return transposition(n, int(values[0]), int(values[1]), space)


def _cmd_act(args) -> str:
    if args.dim is None:
        raise ValueError("--dim is required")
    p = load_symbol(args.symbol, args.dim)
    if args.space == "euclidean" and not p.is_spatial():
        raise ValueError("euclidean elements act on spatial symbols; this one mentions tau")
    elements = [_element(step, args.dim, args.space) for step in args.steps or []]
    result = p
    for g in elements:
        result = pullback_symbol(result, g)
    if args.format == "human":
        return str(result)
    return dumps(
        {
            "symbol": str(p),
            "elements": [g.to_json() for g in elements],
            "result": str(result),
            "result_polynomial": result.to_json(),
        }
    )


def _cmd_gen(args) -> str:
    if args.dim is None:
        raise ValueError("--dim is required")
    ops = gen_instances(args.seed, args.space, args.dim, args.order, args.count, args.kind)
    if args.format == "human":
        return "\n".join(format_operator(op) for op in ops)
    return dumps([op.to_json() for op in ops])


def _cmd_parse(args) -> str:
    mode, text = _read_source(args)
    if mode == "symbol":
        p = load_symbol(text, args.dim)
        return dumps(p.to_json()) if args.format == "json" else str(p)
    op = load_operator(text, args.dim)
    return dumps(op.to_json()) if args.format == "json" else format_operator(op)


COMMANDS = {
    "classify": _cmd_classify,
    "canonicalize": _cmd_canonicalize,
    "witness": _cmd_witness,
    "act": _cmd_act,
    "gen": _cmd_gen,
    "parse": _cmd_parse,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        out = COMMANDS[args.command](args)
    except (ValueError, IndexError, OSError, argparse.ArgumentTypeError) as exc:
        print(f"dalembert {args.command}: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
