"""Certify partial sums of the oscillator series on basic vectors of matching order."""

import argparse
from fractions import Fraction

from bdops.basicvec import BasicVectorSpec, basic_vector
from bdops.polygauss import is_square_integrable
from bdops.series import HOSeriesSpec, ho_partial_sum_apply


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=1)
    ap.add_argument("--mu", type=Fraction, default=Fraction(1))
    ap.add_argument("--omega", type=Fraction, default=Fraction(1))
    args = ap.parse_args()
    for K in range(args.max_k + 1):
        order = 4 * K + 1
        for parity in ("even", "odd"):
            spec = BasicVectorSpec(parity, order, tuple(range(order + 1)))
            img = ho_partial_sum_apply(HOSeriesSpec(K, args.mu, args.omega), basic_vector(spec))
            cert = is_square_integrable(img)
            print(f"K={K} {spec}: image L2 {'certified' if cert else 'FAILED'}")


if __name__ == "__main__":
    main()
