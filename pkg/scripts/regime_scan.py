#!/usr/bin/env python3
"""k0(n), f(k0), f(k0+1) and the regime label on a log-spaced grid of n."""

import argparse
import csv
import sys

import numpy as np

from biclab.problab import regime_classify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=float, default=10)
    ap.add_argument("--hi", type=float, default=1e9)
    ap.add_argument("--points", type=int, default=60)
    ap.add_argument("--T", type=float, default=10.0)
    args = ap.parse_args()

    ns = sorted({int(round(x)) for x in np.geomspace(args.lo, args.hi, args.points)})
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "k0", "log2_f_k0", "log2_f_k0_plus_1", "regime", "lambda", "mu"])
    for n in ns:
        r = regime_classify(n, args.T)
        w.writerow([n, r.k0, f"{r.log2_f_k0:.4f}", f"{r.log2_f_k0_plus_1:.4f}", r.regime,
                    f"{r.lam:.6g}", f"{r.mu:.6g}"])


if __name__ == "__main__":
    main()
