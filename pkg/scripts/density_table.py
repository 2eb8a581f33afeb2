#!/usr/bin/env python3
"""Reproduce the headline density table: one sweep per showcase parameter.

Each row of the taxonomy gets an empirical sweep up to --limit and a
comparison against its exact prediction.  Expect |error| ~ 1/sqrt(pi(N)).
"""

import argparse
import time
from fractions import Fraction as F

from apparition.classify import classify, predicted_densities
from apparition.partition import compare, compute_partition

SHOWCASE = [
    (F(3), 2, "generic"),
    (F(3), 5, "plus-square"),
    (F(2, 7), 3, "cubic primitive"),
    (F(3, 2), 7, "minus-square"),
    (F(2, 3), 2, "type B"),
    (F(6), 2, "type A"),
    (F(6, 5), 2, "circular primitive"),
    (F(48, 25), 2, "circular tower k=1 (conjectural)"),
    (F(5, 2), 2, "reducible type A"),
    (F(10, 3), 3, "reducible generic"),
    (F(7), 2, "non-primitive shift"),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--limit", type=int, default=10**6)
    ap.add_argument("--jmax", type=int, default=4)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    for t, r, label in SHOWCASE:
        pred = predicted_densities(classify(t), r, args.jmax)
        t0 = time.perf_counter()
        rep = compute_partition(t, r, args.limit, j_max=args.jmax, threads=args.threads)
        dt = time.perf_counter() - t0
        flag = " [conjectural]" if pred.conjectural else ""
        print(f"\nt = {t}, r = {r}  ({label}{flag}; rule {pred.source}; "
              f"{rep.total} primes, {dt:.1f}s)")
        print(f"  {'j':>2} {'count':>8} {'empirical':>10} {'predicted':>12} {'z':>7}")
        for row in compare(rep, pred):
            print(
                f"  {row.j:>2} {row.count:>8} {row.empirical:>10.6f} "
                f"{str(row.predicted):>12} {row.z_score:>7.2f}"
            )


if __name__ == "__main__":
    main()
