#!/usr/bin/env python3
"""Empirical constant b for the sparse divisor-sum bound over a grid of
(n, p), skipping pairs that miss the np >= C log2 n precondition."""

import argparse

from biclab.problab import lemma31_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=float, nargs="+", default=[1e5, 1e6, 1e7])
    ap.add_argument("--p", type=float, nargs="+", default=[0.05, 0.02, 0.01, 0.005, 0.002, 0.001, 5e-4, 2e-4, 5e-5])
    ap.add_argument("--C", type=float, default=10.0)
    args = ap.parse_args()

    print(f"{'n':>10} {'p':>8} {'b_empirical':>12} {'worst m':>8} {'min log2 dominance':>19}")
    for n in map(int, args.n):
        for p in args.p:
            if n * p / 4 > 20000:      # keep the m range desk sized
                continue
            try:
                b, rows = lemma31_check(n, p, args.C)
            except ValueError:
                continue
            worst = min(rows, key=lambda r: r.b)
            dom = min(r.log2_dominance for r in rows)
            print(f"{n:10d} {p:8g} {b:12.4f} {worst.m:8d} {dom:19.1f}")


if __name__ == "__main__":
    main()
