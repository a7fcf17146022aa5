#!/usr/bin/env python3
"""Check the area generating-function identities for V_d and V*_d.

Prints, for each d, whether
    V_d  = 1/(1-x) + x/(1-x)^2   V*_d     (as stated)
    V_d  = 1/(1-x) + x^2/(1-x)^2 V*_d     (glued part nonempty)
    V*_d = 1/(1-x) + x^(d+1)/(1-x)^2 V*_d
hold, plus the first coefficients of V*_d next to the shifted brute-force
count of polyominoes whose every initial-altitude gap is >= d.
"""

import argparse

from ddyck import enumerate_dccp, rational_equal, series_coeffs, v_gf, vstar_gf
from ddyck.genfunc import ONE, X, RationalGF


def star_count(n, d):
    if n == 0:
        return 1
    return sum(1 for q in enumerate_dccp(n) if all(y - x >= d for x, y in zip(q.a, q.a[1:])))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=5)
    ap.add_argument("--terms", type=int, default=9)
    args = ap.parse_args()
    col = RationalGF(ONE, 1 - X)
    for d in range(args.max_d + 1):
        v, vs = v_gf(d), vstar_gf(d)
        stated = rational_equal(v, col + RationalGF(X, (1 - X) ** 2) * vs)
        shifted = rational_equal(v, col + RationalGF(X**2, (1 - X) ** 2) * vs)
        star = rational_equal(vs, col + RationalGF(X ** (d + 1), (1 - X) ** 2) * vs)
        print(f"d={d}: stated={stated} shifted={shifted} vstar={star}")
        print("   V*_d coeffs     ", series_coeffs(vs, args.terms - 1))
        print("   |P*_d(n+1)|     ", [star_count(n + 1, d) for n in range(args.terms)])


if __name__ == "__main__":
    main()
