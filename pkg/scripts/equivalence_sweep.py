#!/usr/bin/env python3
"""Large-scale equivalence sweeps: the membership characterizations (both
the open and closed variants) and the Schwarz-lemma condition suite, on
stratified random samples.  Exits nonzero on any disagreement."""

import argparse
import sys
import time

import numpy as np

from polydisc.membership import in_tilde_g, in_tilde_gamma
from polydisc.sampling import exterior_point, near_boundary_point, tilde_g_point
from polydisc.schwarz import SchwarzProblem, check_condition


def membership_sweep(dims, samples, band, rng):
    stats = {"checked": 0, "skipped": 0, "bad": 0}
    for n in dims:
        for i in range(samples):
            u = rng.random()
            if u < 0.4:
                y = tilde_g_point(n, rng)
            elif u < 0.8:
                y = exterior_point(n, rng)
            else:
                y = near_boundary_point(n, rng, spread=1e-6)
            rep = in_tilde_g(y, "ALL", band) if i % 2 else in_tilde_gamma(y, "ALL", band)
            margins = rep.per_condition
            if any(abs(m.slack) <= band for m in margins):
                stats["skipped"] += 1
                continue
            stats["checked"] += 1
            if len({m.holds for m in margins}) != 1:
                stats["bad"] += 1
                print("  DISAGREEMENT:", rep.set_id, n, y.coords)
    return stats


def schwarz_sweep(dims, samples, band, rng):
    stats = {"checked": 0, "skipped": 0, "bad": 0}
    for n in dims:
        if n < 2:
            continue
        done = 0
        while done < samples:
            y = tilde_g_point(n, rng, margin=0.85)
            al = 0.1 + 0.85 * rng.random()
            try:
                p = SchwarzProblem(lambda0=al * np.exp(2j * np.pi * rng.random()), target=y)
            except Exception:
                continue
            done += 1
            margins = [check_condition(p, c, band=band) for c in (3, 4, 6, 7, 8, 9, 10, 11)]
            if any(abs(m.slack) <= band for m in margins):
                stats["skipped"] += 1
                continue
            stats["checked"] += 1
            if len({m.holds for m in margins}) != 1:
                stats["bad"] += 1
                print("  DISAGREEMENT:", p.to_json())
    return stats


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10000, help="per dimension")
    ap.add_argument("--dims", default="2,3,4,5,6")
    ap.add_argument("--band", type=float, default=1e-7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    dims = [int(d) for d in args.dims.split(",")]
    rng = np.random.default_rng(args.seed)

    t0 = time.monotonic()
    mem = membership_sweep(dims, args.samples, args.band, rng)
    print("membership suite :", mem, "(%.1fs)" % (time.monotonic() - t0))
    t0 = time.monotonic()
    sch = schwarz_sweep([n for n in dims if n >= 3], max(1, args.samples // 10), args.band, rng)
    print("Schwarz suite    :", sch, "(%.1fs)" % (time.monotonic() - t0))
    return 1 if (mem["bad"] or sch["bad"]) else 0


if __name__ == "__main__":
    sys.exit(main())
