#!/usr/bin/env python3
"""Empirical large-sieve ratios over the acceptance grid.

For each grid point, 20 seeded +-1 coefficient trials; reports the max ratio
of the character-sum double sum to (bound shape) * (coefficient norm)."""

import argparse
import json

from quartic_moments.moments import sieve_ratio_quadratic, sieve_ratio_quartic


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="32,64,128,256,512")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    grid = [int(t) for t in args.grid.split(",")]

    worst_q = worst_2 = 0.0
    for Q in grid:
        for M in grid:
            rep = sieve_ratio_quartic(Q, M, args.trials, args.seed)
            worst_q = max(worst_q, rep.max_ratio)
            print(json.dumps(rep.to_dict(), sort_keys=True))
    for M in grid:
        for N in grid:
            rep = sieve_ratio_quadratic(M, N, args.trials, args.seed,
                                        matrix_limit=max(grid))
            worst_2 = max(worst_2, rep.max_ratio)
            print(json.dumps(rep.to_dict(), sort_keys=True))
    print(json.dumps({"summary": {"worst_quartic": worst_q, "worst_quadratic": worst_2}},
                     sort_keys=True))


if __name__ == "__main__":
    main()
