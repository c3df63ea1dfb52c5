"""Command-line interface: ``latticepaths {seq,grid,riordan,verify}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import export, families, lattice, riordan, verify
from .riordan import RiordanPair

FAMILY_CHOICES = ("catalan", "schroder-large", "schroder-small", "motzkin")

_ARRAY_RE = re.compile(
    r"^(?:(?P<identity>identity)|(?P<pascal>pascal)(?:\^(?P<power>\d+))?"
    r"|(?P<kind>motzkin|schroder)(?:\[(?P<n>\d+)\])?)$"
)


class UsageError(Exception):
    pass


def parse_array(name: str, order: int) -> RiordanPair:
    """``pascal``, ``pascal^n``, ``identity``, ``motzkin[n]`` or ``schroder[n]``."""
    m = _ARRAY_RE.match(name.strip().lower())
    if not m:
        raise UsageError(
            f"unknown array {name!r}; use pascal, pascal^n, identity, motzkin[n] or schroder[n]"
        )
    if m["identity"]:
        return riordan.identity(order)
    if m["pascal"]:
        return riordan.pascal_power(int(m["power"] or 1), order)
    n = int(m["n"]) if m["n"] is not None else 1
    make = riordan.motzkin_pair if m["kind"] == "motzkin" else riordan.schroder_pair
    return make(n, order)


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=export.FORMATS, default=default,
                        help="output format (default: ascii on a terminal, json otherwise)")
    parser.add_argument("--order", type=int, default=default if suppress else 32,
                        help="series truncation order for verify (default 32)")
    parser.add_argument("--dim", type=int, default=default if suppress else None,
                        help="matrix dimension (riordan default 6, verify default 12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticepaths",
        description="Lattice-path generating functions, count grids and Riordan arrays.",
    )
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print the first terms of a path-counting sequence")
    p.add_argument("family", choices=FAMILY_CHOICES)
    p.add_argument("--colors", type=int, default=None, help="level-step colors")
    p.add_argument("--terms", type=int, default=10)
    _common(p, suppress=True)

    p = sub.add_parser("grid", help="render the lattice of path counts")
    p.add_argument("family", choices=FAMILY_CHOICES)
    p.add_argument("--colors", type=int, default=None)
    p.add_argument("--width", type=int, default=10)
    p.add_argument("--height", type=int, default=5)
    _common(p, suppress=True)

    p = sub.add_parser("riordan", help="materialize or multiply Riordan arrays")
    p.add_argument("op", choices=("materialize", "mul", "pascal-pow"))
    p.add_argument("args", nargs="+", help="array names, or the power for pascal-pow")
    _common(p, suppress=True)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("ids", nargs="*", help="check ids (see --list)")
    p.add_argument("--all", action="store_true", help="run the whole catalog")
    p.add_argument("--list", action="store_true", help="list check ids and exit")
    _common(p, suppress=True)
    return parser


def _format(args) -> str:
    if args.format:
        return args.format
    return "ascii" if sys.stdout.isatty() else "json"


def cmd_seq(args, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be at least 1")
    if args.colors is not None and not 0 <= args.colors <= 64:
        raise UsageError("--colors must be in 0..64")
    fam = families.family(args.family, args.colors)
    seq = families.named_sequence(fam, args.terms - 1)
    out.write(export.render_sequence(fam.label, fam.n_colors, list(seq.coeffs), _format(args)))
    return 0


def cmd_grid(args, out) -> int:
    if not 0 <= args.width <= 64:
        raise UsageError("--width must be in 0..64")
    if not 0 <= args.height <= 32:
        raise UsageError("--height must be in 0..32")
    fam = families.family(args.family, args.colors)
    grid = lattice.build_grid(lattice.step_set_for(fam.id, fam.n_colors), args.width, args.height)
    out.write(export.render_grid(grid, _format(args)))
    return 0


def cmd_riordan(args, out) -> int:
    dim = 6 if args.dim is None else args.dim
    if not 1 <= dim <= 64:
        raise UsageError("--dim must be in 1..64")
    order = dim - 1
    if args.op == "materialize":
        if len(args.args) != 1:
            raise UsageError("materialize takes one array name")
        pair = parse_array(args.args[0], order)
    elif args.op == "mul":
        if len(args.args) < 2:
            raise UsageError("mul takes two or more array names")
        pair = parse_array(args.args[0], order)
        for name in args.args[1:]:
            pair = riordan.riordan_mul(pair, parse_array(name, order))
    else:
        if len(args.args) != 1 or not args.args[0].isdigit():
            raise UsageError("pascal-pow takes one non-negative integer")
        pair = riordan.pascal_power(int(args.args[0]), order)
    out.write(export.render_matrix(riordan.materialize(pair, dim), _format(args)))
    return 0


def cmd_verify(args, out) -> int:
    if args.list:
        for c in verify.checks():
            out.write(f"{c.id:<28} {c.description}\n")
        return 0
    if args.all == bool(args.ids):
        raise UsageError("give check ids or --all (not both)")
    dim = 12 if args.dim is None else args.dim
    try:
        if args.all:
            results = verify.run_all(order=args.order, dimension=dim)
        else:
            results = [
                verify.run_check(verify.IdentityCheck(cid, {"order": args.order, "dimension": dim}))
                for cid in args.ids
            ]
    except verify.CheckError as exc:
        raise UsageError(str(exc)) from None
    passed = sum(r.passed for r in results)
    if _format(args) == "json":
        out.write(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
    elif _format(args) == "csv":
        out.write("id,passed,detail\n")
        for r in results:
            out.write(f"{r.id},{str(r.passed).lower()},\"{r.detail or ''}\"\n")
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.id}"
            if r.detail:
                line += f"  -- {r.detail}"
            out.write(line + "\n")
        out.write(f"{len(results)} checks, {passed} passed\n")
    return 0 if passed == len(results) else 1


COMMANDS = {"seq": cmd_seq, "grid": cmd_grid, "riordan": cmd_riordan, "verify": cmd_verify}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
