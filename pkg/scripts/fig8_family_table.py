#!/usr/bin/env python3
"""Tabulate the -(4n+1)/n surgeries on the figure-eight pattern.

For each n the surgery carries 4n+1 spin-c classes. The table lists how
many of them are L-structures, the total rank, and the genus lower bound
for describing the same manifold by an integer surgery.
"""

import argparse

from hfcone.cone import Framing, surgery_report
from hfcone.obstruct import gz_lower_bound
from hfcone.profiles import figure_eight


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=25, help="largest n to tabulate")
    args = ap.parse_args()

    profile = figure_eight()
    print(f"{'n':>3} {'framing':>10} {'ell':>5} {'total':>6} {'gz_bound':>9}")
    for n in range(1, args.max_n + 1):
        p = 4 * n + 1
        report = surgery_report(profile, Framing(-p, n))
        bound = gz_lower_bound(p, report.ell)
        shown = "-" if bound is None else str(bound)
        print(f"{n:>3} {f'-{p}/{n}':>10} {report.ell:>5} {report.total_rank:>6} {shown:>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
