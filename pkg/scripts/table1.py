#!/usr/bin/env python3
"""Print the restricted d-Bell table from the recurrence, with a brute-force column check."""

import argparse

from ddyck import bell_d, enumerate_set_partitions, is_pid_member


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-d", type=int, default=4)
    ap.add_argument("--brute-n", type=int, default=9, help="cross-check by enumeration up to this n")
    args = ap.parse_args()

    print("d\\n " + " ".join(f"{n:>7}" for n in range(args.max_n + 1)))
    for d in range(args.max_d + 1):
        row = [bell_d(n, d) for n in range(args.max_n + 1)]
        print(f"{d:>3} " + " ".join(f"{v:>7}" for v in row))
        for n in range(min(args.brute_n, args.max_n) + 1):
            brute = sum(1 for p in enumerate_set_partitions(n) if is_pid_member(p, d))
            if brute != row[n]:
                print(f"    mismatch at n={n}: brute force gives {brute}")


if __name__ == "__main__":
    main()
