"""Command-line interface.

All subcommands read '-' as stdin and write '-' as stdout, so they pipe:
``z4lift gen hamming8e | z4lift lift - --random --seed 1 | z4lift verify -``.
Exit codes: 0 success, 2 budget exhausted, 3 invalid input or module error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, codes, formats, gf2, lattice, z4
from . import lifter as lift
from .errors import BudgetExceeded, BudgetExhausted, UnknownName, Z4LiftError


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_binary_source(source: str) -> gf2.BinaryCode:
    """Resolve a builtin name, a file path, or '-' to a binary code."""
    if source != "-" and not os.path.exists(source):
        try:
            return codes.builtin(source)
        except UnknownName:
            pass
    return formats.load_binary(_read(source))


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("Z4LIFT_THREADS", "1")))
    except ValueError:
        return 1


def _cmd_gen(args) -> int:
    _write(args.output, formats.save_binary(codes.builtin(args.name)))
    return 0


def _cmd_lift(args) -> int:
    code = _load_binary_source(args.source)
    m = code.n // 2
    if args.free is not None:
        bits = lift.FreeBits.from_hex(m, args.free)
    elif args.random:
        bits = lift.derive_free_bits(m, args.seed, 0)
    else:
        bits = lift.FreeBits.zero(m)
    lifted, _perm = lift.lift(code, bits)
    _write(args.output, formats.save_z4(lifted))
    print(f"type_ii: {str(z4.is_type_ii(lifted)).lower()}", file=sys.stderr)
    print(f"free_bits: {bits.to_hex()}", file=sys.stderr)
    return 0


def _cmd_search(args) -> int:
    code = _load_binary_source(args.source)
    cfg = lift.SearchConfig(
        seed=args.seed,
        max_candidates=args.max_iters,
        time_limit=args.time_limit,
        backend=args.backend,
        threads=args.threads,
        descent=args.descent,
    )
    report = lift.search_extremal(code, cfg)
    record = formats.ResultRecord(
        code=args.source,
        outcome=report.outcome,
        witness=report.witness_hex,
        certificate=report.backend,
        min_norm=report.min_norm,
        d_e=report.d_e,
        candidates=report.candidates,
        elapsed_s=round(report.elapsed, 3),
        seed=report.seed,
        version=__version__,
    )
    line = record.to_json_line() + "\n"
    if args.output == "-":
        sys.stdout.write(line)
    else:
        with open(args.output, "a") as fh:
            fh.write(line)
    return 0 if report.found else 2


def _cmd_verify(args) -> int:
    code = formats.load_z4(_read(args.source))
    sd = z4.is_self_dual_z4(code)
    t2 = sd and z4.is_type_ii(code)
    res = z4.residue_code(code)
    print(f"length: {code.n}")
    print(f"self_dual: {str(sd).lower()}")
    print(f"type_ii: {str(t2).lower()}")
    print(f"residue_dimension: {res.k}")
    if t2 and code.n < 48:
        extremal = lattice.certify_extremal(code)
        print(f"extremal: {str(extremal).lower()}")
    return 0


def _cmd_svp(args) -> int:
    text = _read(args.source)
    kind = formats.detect_kind(text)
    if kind == "z4":
        basis = lattice.construction_a4(formats.load_z4(text))
    elif kind == "basis":
        basis = formats.load_basis(text)
    else:
        print("error: FormatError: svp expects a Z4 code or basis file", file=sys.stderr)
        return 3
    if args.bound is not None:
        bound = Fraction(args.bound)
        res = lattice.shortest_vectors(basis, bound, count=args.count)
        if res.min_norm is None:
            print(f"min_norm: none <= {bound}")
            return 0
    else:
        res = lattice.min_norm(basis, count=args.count)
    print(f"min_norm: {res.min_norm}")
    if args.count:
        print(f"count: {res.count}")
    print("witness: " + " ".join(str(v) for v in res.witness))
    return 0


def _cmd_residue(args) -> int:
    code = formats.load_z4(_read(args.source))
    _write(args.output, formats.save_binary(z4.residue_code(code)))
    return 0


def _cmd_weights(args) -> int:
    text = _read(args.source)
    kind = args.kind if args.kind != "auto" else formats.detect_kind(text)
    if kind == "binary":
        dist = gf2.weight_distribution(formats.load_binary(text), args.cap)
        for w in sorted(dist):
            print(f"{w}: {dist[w]}")
    elif kind == "z4":
        d_e = z4.min_euclidean_weight_bruteforce(formats.load_z4(text), args.cap)
        print(f"d_e: {d_e}")
    else:
        print("error: FormatError: weights expects a code file", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="z4lift", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a builtin binary code")
    p.add_argument("name")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("lift", help="lift a binary code to a Type II Z4 code")
    p.add_argument("source", nargs="?", default="-")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--free", help="free bits as hex")
    g.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("search", help="search free bits for an extremal lift")
    p.add_argument("source")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=10_000)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--backend", choices=("svp", "enum"), default="svp")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--descent", action="store_true")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="report self-duality, Type II, extremality")
    p.add_argument("source", nargs="?", default="-")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("svp", help="exact shortest vector of a lattice")
    p.add_argument("source", nargs="?", default="-")
    p.add_argument("--bound", default=None, help="true-norm bound (integer or p/q)")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=_cmd_svp)

    p = sub.add_parser("residue", help="write the residue code of a Z4 code")
    p.add_argument("source", nargs="?", default="-")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=_cmd_residue)

    p = sub.add_parser("weights", help="weight distribution / brute-force d_E")
    p.add_argument("source", nargs="?", default="-")
    p.add_argument("--cap", type=int, default=z4.DEFAULT_CAP)
    p.add_argument("--kind", choices=("auto", "binary", "z4"), default="auto")
    p.set_defaults(func=_cmd_weights)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, BudgetExhausted) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (Z4LiftError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
