"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch or flagged record,
2 invalid input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import batch
from .criteria import predict_ord2_h2p, predict_ord2_hK
from .errors import InternalError, InvalidInput
from .formclass import class_number, h2p
from .modular import is_prime, jacobi, quartic_symbol, quartic_symbol_2
from .zsqrt2 import decompose, spin_value

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=1))


def _odd_prime(p: int) -> int:
    if p % 2 == 0 or not is_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")
    return p


def cmd_decompose(args) -> int:
    d = decompose(args.p)
    out = {"p": d.p, "u": d.u, "v": d.v}
    if args.p % 8 == 7:
        out["invariant"] = jacobi(2 * d.u, d.v)
    _emit(out)
    return EXIT_OK


def cmd_symbols(args) -> int:
    p = _odd_prime(args.p)
    out = {"p": p, "jacobi_2_p": jacobi(2, p)}
    if p % 8 == 1:
        out["quartic2"] = quartic_symbol_2(p)
        u = decompose(p).u
        if jacobi(u, p) == 1:
            out["quartic_u"] = quartic_symbol(u, p)
    if p % 8 in (1, 7):
        d = decompose(p)
        sv = spin_value(d.element)
        out.update(u=d.u, v=d.v, spin=sv.plain, lam=sv.lam, twisted_spin=sv.twisted)
    _emit(out)
    return EXIT_OK


def cmd_classnum(args) -> int:
    s = class_number(args.disc) if args.disc is not None else h2p(args.p)
    _emit(asdict(s))
    return EXIT_OK


def cmd_predict(args) -> int:
    p = _odd_prime(args.p) if args.p != 2 else 2
    out = {"p": p, "hK": predict_ord2_hK(p, args.conjecture).as_dict()}
    if p != 2:
        out["h2p"] = predict_ord2_h2p(p).as_dict()
    _emit(out)
    return EXIT_OK


def cmd_scan(args) -> int:
    mods, residues = args.mod or [], args.cls or []
    if len(mods) != len(residues):
        raise InvalidInput("--mod and --class must be given in pairs")
    if args.lower > args.upper:
        raise InvalidInput("--from exceeds --to")
    if args.jobs < 1:
        raise InvalidInput("--jobs must be >= 1")
    cache = batch.ScanCache(args.cache) if args.cache else None
    records = list(batch.scan(args.lower, args.upper, args.exact_limit, args.conjecture,
                              list(zip(mods, residues)), args.jobs, cache))
    text = batch.format_records(records, args.format)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    flagged = [r.p for r in records if r.flagged]
    if flagged:
        print(f"flagged primes: {flagged[:50]}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_census(args) -> int:
    _emit(batch.census(args.limit).as_dict())
    return EXIT_OK


def cmd_density(args) -> int:
    checkpoints = [int(c) for c in args.checkpoints.split(",") if c]
    _emit([asdict(r) for r in batch.density_table(args.limit, checkpoints)])
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = batch.verify(args.limit, args.seed, args.jobs)
    _emit([s.as_dict() for s in suites])
    for s in suites:
        print(f"{'PASS' if s.ok else 'FAIL'} {s.name} ({s.checked} checks)", file=sys.stderr)
    return EXIT_OK if all(s.ok for s in suites) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="purequartic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="canonical p = u^2 - 2v^2 and the (2u/v) invariant")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("symbols", help="residue and spin symbols attached to p")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_symbols)

    p = sub.add_parser("classnum", help="exact class number of Q(sqrt(-2p)) or of a discriminant")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("p", type=int, nargs="?")
    g.add_argument("--disc", type=int)
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("predict", help="predicted ord2 of h(-2p) and h_K")
    p.add_argument("p", type=int)
    p.add_argument("--conjecture", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("scan", help="one record per prime in [--from, --to]")
    p.add_argument("--from", dest="lower", type=int, required=True)
    p.add_argument("--to", dest="upper", type=int, required=True)
    p.add_argument("--mod", type=int, action="append")
    p.add_argument("--class", dest="cls", type=int, action="append")
    p.add_argument("--exact-limit", type=int)
    p.add_argument("--conjecture", action="store_true")
    p.add_argument("--format", choices=("csv", "json", "table"), required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", help="resumable CSV cache file")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("census", help="counts over p < X")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("density", help="empirical densities at checkpoints")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--checkpoints", required=True)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="oracle agreement and lemma campaigns")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    try:
        return args.func(args)
    except InvalidInput as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except InternalError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
