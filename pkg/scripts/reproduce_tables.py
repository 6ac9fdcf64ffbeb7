#!/usr/bin/env python3
"""Recompute the packaged expected-value table and report the diff.

By default every known cell in scope is recomputed and compared; cells
marked "unknown" in the table are skipped unless --include-unknown is
given, in which case their decompositions are printed as new results.

Typical runs:

    python scripts/reproduce_tables.py --rank 2 --hopf sym
    python scripts/reproduce_tables.py --max-degree 5 --jobs 4
    python scripts/reproduce_tables.py --include-unknown --max-degree 6 \
        --cache-dir .blockcache
"""

import argparse
import sys

sys.path.insert(0, "src")

from hopfquotients.tables import (  # noqa: E402
    UNKNOWN,
    entries_in_scope,
    load_expected,
    verify_against,
)
from hopfquotients.decompose import decompose  # noqa: E402
from hopfquotients.hopf import HopfAlgebra  # noqa: E402
from hopfquotients.presentations import FunctorSpec  # noqa: E402


def fmt_pairs(pairs):
    if not pairs:
        return "0"
    return " + ".join(
        f"{m}*{list(lam)}" if m > 1 else f"{list(lam)}" for lam, m in pairs
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--against", default=None, help="alternate expected-table JSON")
    ap.add_argument("--functor", choices=["H", "Omega"], default=None)
    ap.add_argument("--rank", type=int, choices=[2, 3], default=None)
    ap.add_argument("--hopf", choices=["sym", "tensor"], default=None)
    ap.add_argument("--max-degree", type=int, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache-dir", default=None)
    ap.add_argument("--include-unknown", action="store_true",
                    help="also compute cells the table leaves open")
    args = ap.parse_args(argv)

    table = load_expected(args.against)
    report = verify_against(
        table,
        functor=args.functor,
        rank=args.rank,
        hopf=args.hopf,
        max_degree=args.max_degree,
        jobs=args.jobs,
        cache_dir=args.cache_dir,
    )
    print(f"engine {report['engine_version']}: "
          f"{report['matches']}/{report['checked']} cells match")
    for miss in report["mismatches"]:
        print(f"  MISMATCH {miss['functor']} rank {miss['rank']} "
              f"{miss['hopf']} degree {miss['degree']}:")
        for d in miss["diff"]:
            print(f"    {d['partition']}: expected {d['expected']}, "
                  f"computed {d['computed']}")
    for flag in report["flagged"]:
        print(f"  flagged cell {flag['functor']} rank {flag['rank']} "
              f"{flag['hopf']} degree {flag['degree']} {flag['partition']}: "
              f"computed {flag['computed']} ({flag['note']})")

    if args.include_unknown:
        for entry in entries_in_scope(table, args.functor, args.rank,
                                      args.hopf, args.max_degree):
            if entry["value"] != UNKNOWN:
                continue
            spec = FunctorSpec(entry["functor"], entry["rank"],
                               HopfAlgebra(entry["hopf"], 1))
            dec = decompose(spec, entry["degree"], jobs=args.jobs,
                            cache_dir=args.cache_dir)
            pairs = sorted(dec.entries.items(), reverse=True)
            print(f"  NEW {entry['functor']} rank {entry['rank']} "
                  f"{entry['hopf']} degree {entry['degree']} = {fmt_pairs(pairs)}")

    return 1 if report["mismatches"] else 0


if __name__ == "__main__":
    sys.exit(main())
