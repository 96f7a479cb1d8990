"""Log-log slopes of the moment coefficients A(j, k) over a k window."""

import argparse
import json

from bdops.moments import asymptotic_exponent, moment_A_float


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=100)
    ap.add_argument("--hi", type=int, default=2000)
    ap.add_argument("--jmax", type=int, default=4)
    args = ap.parse_args()
    rows = []
    for parity, sign in (("even", -1), ("odd", 1)):
        for j in range(args.jmax + 1):
            slope = asymptotic_exponent(lambda k: moment_A_float(parity, j, k), (args.lo, args.hi))
            rows.append({"parity": parity, "j": j, "slope": slope, "expected": j + sign * 0.25})
            print(f"{parity:4s} j={j}  slope={slope:.5f}  expected={j + sign * 0.25:+.2f}")
    print(json.dumps(rows))


if __name__ == "__main__":
    main()
