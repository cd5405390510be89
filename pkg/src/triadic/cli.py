"""Command-line driver: ``triadic verify ...`` and ``triadic identities ...``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .sweep import CLAIMS, MODES, IdentityConfig, SweepConfig, diagnostics, run_identities, run_sweep, write_report


def int_list(text: str) -> tuple[int, ...]:
    """Parse ``"4,7,10"``, ``"4..100"`` or ``"4..100:3"`` (ranges inclusive), comma-joined."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            span, _, stride = part.partition(":")
            lo, hi = span.split("..")
            out.extend(range(int(lo), int(hi) + 1, int(stride) if stride else 1))
        else:
            out.append(int(part))
    return tuple(out)


def fraction_list(text: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(p.strip()) for p in text.split(",") if p.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triadic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep one claim over a parameter grid")
    v.add_argument("--claim", required=True, choices=CLAIMS)
    v.add_argument("--n-max", type=int, default=100)
    v.add_argument("--m", type=int_list, default=int_list("4..100:3"),
                   help="m values: list and/or lo..hi[:stride] ranges")
    v.add_argument("--a", type=int_list, default=int_list("2..6"), help="exponents a for 3^a-term claims")
    v.add_argument("--p", type=int, default=None, help="prime for sun12 (default: largest odd prime of m-4)")
    v.add_argument("--mode", choices=MODES, default="auto")
    v.add_argument("--both-rate", type=float, default=0.01,
                   help="fraction of auto/fast tuples cross-checked in both modes")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", default=None, help="report path (default: stdout)")
    v.add_argument("--progress", action="store_true")
    v.add_argument("--omit-timing", action="store_true", help="leave wall time out for byte-stable reports")

    i = sub.add_parser("identities", help="check the exact identities and auxiliary congruences")
    i.add_argument("--n-max", type=int, default=50)
    i.add_argument("--m", type=int_list, default=(4, 7, 10))
    i.add_argument("--x", type=fraction_list, default=fraction_list("0,1,-1,1/2"))
    i.add_argument("--f-a", type=int_list, default=(2, 3, 4))
    i.add_argument("--row-a-max", type=int, default=4)
    i.add_argument("--triple-k-max", type=int, default=500)
    i.add_argument("--out", default=None)
    i.add_argument("--omit-timing", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            config = SweepConfig(
                claim=args.claim, n_max=args.n_max, m_values=args.m, a_values=args.a, p=args.p,
                mode=args.mode, jobs=args.jobs, seed=args.seed, both_rate=args.both_rate, out=args.out,
                progress=args.progress, omit_timing=args.omit_timing,
            )
            report, status = run_sweep(config)
        else:
            config = IdentityConfig(
                n_max=args.n_max, m_values=args.m, x_values=args.x, f_a_values=args.f_a,
                row_a_max=args.row_a_max, triple_k_max=args.triple_k_max, out=args.out,
                omit_timing=args.omit_timing,
            )
            report, status = run_identities(config)
    except ValueError as exc:
        print(f"triadic: error: {exc}", file=sys.stderr)
        return 2
    write_report(report, config.out)
    if status:
        print(diagnostics(report), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
