#!/usr/bin/env python3
"""Second-moment growth: sum_{q<=Q} sum_chi |L(1/2+it, chi)|^2 across doubling Q,
with the fitted log-log exponent and the Q^{7/6+0.1} (1+|t|)^{0.6} bound constant."""

import argparse
import json

from quartic_moments.moments import second_moment


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--Q", type=int, default=4000)
    ap.add_argument("--t", type=float, default=0.0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    rep = second_moment(args.Q, args.t, workers=args.workers)
    print(json.dumps(rep.to_dict(), sort_keys=True))


if __name__ == "__main__":
    main()
