#!/usr/bin/env python3
"""Compare the closed-form TIPL series with brute-force totals over polyominoes."""

import argparse
import time

from ddyck import series_coeffs, t_gf, total_tipl


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, nargs="+", default=[0, 1, 2, 3])
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()
    for d in args.d:
        t0 = time.perf_counter()
        closed = series_coeffs(t_gf(d), args.max_n)
        brute = [total_tipl(n, d) for n in range(args.max_n + 1)]
        flag = "ok" if closed == brute else "MISMATCH"
        print(f"d={d}  {flag}  ({time.perf_counter() - t0:.2f}s)")
        print("  series:", closed)
        if closed != brute:
            print("  brute: ", brute)


if __name__ == "__main__":
    main()
