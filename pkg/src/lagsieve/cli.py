"""Command line entry point: ``lagsieve <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys

from . import campaign
from .criteria import bsq_scan
from .dioph import SUNIT_CAPS, sunit_solutions
from .polygon import newton_polygon
from .polys import AlphaParam, build_g
from .witness import ScopeExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _alpha(args) -> AlphaParam:
    return AlphaParam(args.alpha_u, args.alpha_a, args.alpha_d)


def _emit(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _report(args, report: campaign.SweepReport) -> int:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json(full=True) + "\n")
    if args.json:
        print(report.to_json(full=False))
    else:
        print(f"{report.theorem_tag}: {'PASS' if report.ok else 'MISMATCH'}")
        for key in sorted(report.summary):
            print(f"  {key}: {report.summary[key]}")
        for m in report.mismatches:
            print(f"  mismatch: {m}")
        for note in report.notes:
            print(f"  note: {note}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_np(args) -> int:
    if args.n is None or args.prime is None:
        raise ValueError("np needs --n and --prime")
    poly = build_g(args.n, _alpha(args))
    _emit(args, json.dumps(newton_polygon(poly, args.prime).to_dict()))
    return EXIT_OK


def cmd_exclude(args) -> int:
    if args.n is None or args.k is None:
        raise ValueError("exclude needs --n and --k")
    cert = campaign.exclude_degree(args.n, _alpha(args), args.k)
    out = {
        "n": args.n, "alpha": str(_alpha(args)), "k": args.k,
        "excluded": cert is not None,
        "certificate": list(cert) if cert else None,
    }
    _emit(args, json.dumps(out))
    return EXIT_OK if cert else EXIT_MISMATCH


def cmd_theorem1(args) -> int:
    return _report(args, campaign.verify_theorem1(args.nmax or 130))


def cmd_theorem2(args) -> int:
    return _report(args, campaign.verify_theorem2(args.nmax or 130))


def cmd_tables(args) -> int:
    return _report(args, campaign.verify_tables())


def cmd_galois(args) -> int:
    return _report(args, campaign.verify_galois(args.nmax or 130, args.limit or 1000))


def cmd_sunit(args) -> int:
    triples = sunit_solutions(13, args.limit or 10**8)
    lines = [json.dumps(t.to_dict(), sort_keys=True) for t in triples]
    capped = sum(t.within_caps(SUNIT_CAPS) for t in triples)
    _emit(args, "\n".join(lines))
    print(f"# {len(triples)} triples, {capped} within caps", file=sys.stderr)
    return EXIT_OK


def cmd_bsq(args) -> int:
    found = bsq_scan(args.alpha_u if args.alpha_u > 0 else 45, args.nmax or 200)
    _emit(args, json.dumps([list(t) for t in found]))
    return EXIT_OK if all(n == 1 for _, n in found) else EXIT_MISMATCH


COMMANDS = {
    "np": cmd_np, "exclude": cmd_exclude, "theorem1": cmd_theorem1,
    "theorem2": cmd_theorem2, "tables": cmd_tables, "galois": cmd_galois,
    "sunit": cmd_sunit, "bsq": cmd_bsq,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lagsieve", description=__doc__)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--alpha-u", type=int, default=0,
                        help="alpha = u + a/d (for bsq: the u bound)")
    parser.add_argument("--alpha-a", type=int, default=0)
    parser.add_argument("--alpha-d", type=int, default=1)
    parser.add_argument("--prime", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--nmax", type=int)
    parser.add_argument("--limit", type=int)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--out", metavar="FILE")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, ScopeExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
