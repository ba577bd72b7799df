"""Hurwitz relation gap and error estimates over a complex s-grid."""
import argparse

import numpy as np

from halfspec.special import hurwitz_relation_gap, hurwitz_zeta


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--re", type=float, nargs=2, default=[-5.0, 5.0])
    parser.add_argument("--im", type=float, nargs=2, default=[-3.0, 3.0])
    parser.add_argument("--points", type=int, default=7)
    args = parser.parse_args()

    print(f"{'s':>22} {'relation gap':>13} {'err bound':>10}")
    for re in np.linspace(*args.re, args.points):
        for im in np.linspace(*args.im, args.points):
            s = complex(re, im)
            if abs(s - 1) < 1e-6:
                continue
            z = hurwitz_zeta(s, 0.5)
            print(f"{s!s:>22} {hurwitz_relation_gap(s):13.2e} {z.err:10.2e}")


if __name__ == "__main__":
    main()
