"""Dream counts per mode and class sizes, tabulated by n.

Usage: python scripts/census.py [--max-n 5]
"""
import argparse
from collections import Counter

from ipdreams.core import all_partial_permutations
from ipdreams.dreams import Mode, enumerate_dreams


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print(f"{'n':>2} {'f':>5} " + " ".join(f"{m.value:>7}" for m in Mode) + "  max KT per f")
    for n in range(1, args.max_n + 1):
        fs = list(all_partial_permutations(n))
        totals = Counter()
        biggest = 0
        for f in fs:
            for m in Mode:
                c = len(enumerate_dreams(f, m))
                totals[m] += c
                if m is Mode.KT:
                    biggest = max(biggest, c)
        print(f"{n:>2} {len(fs):>5} " + " ".join(f"{totals[m]:>7}" for m in Mode) + f"  {biggest:>5}")


if __name__ == "__main__":
    main()
