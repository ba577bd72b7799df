"""Tabulate sqrt(t) * Tr exp(-t A^2) as t -> 0 against the candidate constants."""
import argparse
import math

import numpy as np

from halfspec.invariants import heat_trace, heat_trace_leading_coefficient


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t-min", type=float, default=1e-5)
    parser.add_argument("--t-max", type=float, default=1.0)
    parser.add_argument("--points", type=int, default=11)
    args = parser.parse_args()

    print(f"{'t':>10} {'sqrt(t)*direct':>18} {'theta-direct':>12} {'poisson-direct':>14}")
    for t in np.geomspace(args.t_min, args.t_max, args.points):
        h = heat_trace(t)
        print(f"{t:10.3e} {math.sqrt(t) * h.direct_sum:18.12f} "
              f"{h.theta_value - h.direct_sum:12.2e} {h.poisson_value - h.direct_sum:14.2e}")

    fit = heat_trace_leading_coefficient((1e-4, 4e-4, 1e-3))
    print(f"\nfitted constant  {fit.constant:.12f}")
    for name, gap in (("sqrt(pi)", fit.gap_sqrt_pi), ("1/sqrt(pi)", fit.gap_inv_sqrt_pi), ("1/2", fit.gap_half)):
        print(f"gap to {name:<11} {gap:.3e}")


if __name__ == "__main__":
    main()
