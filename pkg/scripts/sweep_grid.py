#!/usr/bin/env python3
"""Route-agreement sweep across ranks: for every pair of dominant weights
inside the degree window, compare the two section-multiplicity routes and
report timings plus any violations (there should never be any)."""

import argparse
import sys
import time

from exoticcone.rootdata import in_conv
from exoticcone.sections import (
    dominant_weights_of_degree,
    h0_mult,
    h0_mult_subsets,
)


def sweep(n, bound):
    grid = [
        mu for k in range(bound + 1) for mu in dominant_weights_of_degree(n, k)
    ]
    bad = []
    start = time.monotonic()
    for mu in grid:
        for lam in grid:
            a = h0_mult(mu, lam)
            b = h0_mult_subsets(mu, lam)
            if a != b or a < 0 or (not in_conv(lam, mu) and a != 0):
                bad.append((mu, lam, a, b))
    elapsed = time.monotonic() - start
    return len(grid) ** 2, bad, elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=3)
    parser.add_argument("--bound", type=int, default=4)
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.max_rank + 1):
        cells, bad, elapsed = sweep(n, args.bound)
        status = "ok" if not bad else f"{len(bad)} VIOLATIONS"
        print(f"n={n} bound={args.bound}: {cells} cells in {elapsed:.2f}s [{status}]")
        for mu, lam, a, b in bad:
            print(f"  mu={mu} lam={lam}: route a={a}, route b={b}")
        failures += len(bad)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
