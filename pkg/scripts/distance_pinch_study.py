#!/usr/bin/env python3
"""Pinch study: on random points of the slice J_n, squeeze the closed-form
invariant distance between its Caratheodory lower bound and the certified
Lempert upper bound, and report the gap statistics."""

import argparse
import sys

import numpy as np

from polydisc.distances import carath_lower, dist_formula, lempert_upper
from polydisc.mobius import d_norm
from polydisc.sampling import j_point


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200, help="per dimension")
    ap.add_argument("--dims", default="2,3,5")
    ap.add_argument("--grid", type=int, default=8192)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    bad = 0
    for n in (int(d) for d in args.dims.split(",")):
        lower_gaps, upper_gaps, sentinels = [], [], 0
        done = 0
        while done < args.samples:
            y = j_point(n, rng)
            top = max(d_norm(j, y) for j in range(1, n))
            if not 0.05 < top < 0.95 or abs(y.q) > top - 1e-3:
                continue
            done += 1
            closed = dist_formula(y)
            lower, _, _ = carath_lower(y, grid=args.grid)
            upper, disc = lempert_upper(y)
            if disc is None:
                sentinels += 1
                continue
            lower_gaps.append(closed - lower)
            upper_gaps.append(upper - closed)
            if closed - lower < -1e-9 or upper - closed < -1e-9 or upper - closed > 1e-9:
                bad += 1
                print("  PINCH VIOLATION:", n, y.coords)
        print(
            "n=%d: %d points | closed-lower gap max %.3e | upper-closed gap max %.3e"
            " | unconstructed: %d"
            % (n, done, max(lower_gaps), max(np.abs(upper_gaps)), sentinels)
        )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
