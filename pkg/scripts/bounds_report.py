#!/usr/bin/env python3
"""Sweep computed multiplicities against the closed-form predictions.

For each degree in range, decompose the chosen quotient of Sym and
print one line per partition: computed multiplicity, predicted value,
and whether they agree, exceed, or violate the bound.  Strict rows are
interesting; violations should never happen.

    python scripts/bounds_report.py --functor H --rank 3 --degrees 3 8
    python scripts/bounds_report.py --functor Omega --rank 2 --degrees 2 12 --jobs 4
"""

import argparse
import sys

sys.path.insert(0, "src")

from hopfquotients.decompose import VIOLATION, decompose, verify_bounds  # noqa: E402
from hopfquotients.hopf import HopfAlgebra  # noqa: E402
from hopfquotients.presentations import FunctorSpec  # noqa: E402


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--functor", choices=["H", "Omega"], required=True)
    ap.add_argument("--rank", type=int, choices=[2, 3], required=True)
    ap.add_argument("--degrees", type=int, nargs=2, metavar=("LO", "HI"),
                    default=(2, 8))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--only-nonzero", action="store_true",
                    help="hide rows where both sides are 0")
    args = ap.parse_args(argv)

    spec = FunctorSpec(args.functor, args.rank, HopfAlgebra("sym", 1))
    lo, hi = args.degrees
    bad = 0
    strict = 0
    for degree in range(lo, hi + 1):
        dec = decompose(spec, degree, jobs=args.jobs, cache_dir=args.cache_dir)
        report = verify_bounds(dec)
        shown = [r for r in report.rows
                 if not (args.only_nonzero and r.computed == r.bound == 0)]
        if shown:
            print(f"degree {degree}:")
        for row in shown:
            mark = row.relation
            if mark == VIOLATION:
                bad += 1
            elif mark == ">":
                strict += 1
            print(f"  {str(list(row.partition)):<16} computed {row.computed:<3} "
                  f"predicted {row.bound:<3} {mark}")
    print(f"{strict} strict rows, {bad} violations")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
