#!/usr/bin/env python3
"""Sweep the two-generated parameter mu and tabulate axet sizes.

Over the rationals the size is 3, 4 or 6 at mu = -1/2, 0, 1/2 and infinite
almost everywhere else; over F_p it is p at mu = 1, 2p at mu = -1 and
coprime to p otherwise.  Example:

    python scripts/axet_sweep.py --p 7
    python scripts/axet_sweep.py --mus=-1,-1/2,0,1/2,1,2
"""

import argparse
from fractions import Fraction

from splitspin import Field, TwoGenConfig, axet, build_two_gen, rho_order
from splitspin.two_gen import default_two_gen_alpha


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, help="prime field (default: rationals)")
    parser.add_argument(
        "--mus",
        default="-2,-1,-1/2,0,1/2,1,2,3",
        help="comma-separated mu values",
    )
    return parser.parse_args()


def main():
    args = parse_args()
    field = Field.prime(args.p) if args.p else Field.rationals()
    alpha = default_two_gen_alpha(field)
    mus = [field.scalar(Fraction(m.strip())) for m in args.mus.split(",")]
    print(f"field={field!r}  alpha={alpha}")
    print(f"{'mu':>8} {'|X|':>10} {'rho order':>10} {'D-orbits':>12} {'[Dhat:D]':>9}")
    for mu in mus:
        order = rho_order(field, mu)
        cfg = TwoGenConfig(field, mu=mu, alpha=alpha)
        algebra, x, y = build_two_gen(cfg)
        result = axet(algebra, x, y)
        size = result.size.order if result.size.is_finite else "infinite"
        rho_text = order.order if order.is_finite else "infinite"
        print(f"{str(mu):>8} {str(size):>10} {str(rho_text):>10} "
              f"{result.d_orbit_split:>12} {result.d_hat_index:>9}")


if __name__ == "__main__":
    main()
