"""Compare every K_T class in Gr_k(n) against fixed-point localization.

Usage: python scripts/localization_check.py [--n 4]
Needs sympy. The oracle lives in tests/localization.py.
"""
import argparse
import sys
import time
from pathlib import Path

import sympy as sp

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from localization import E, expand_by_localization  # noqa: E402

from ipdreams.classes import expand  # noqa: E402
from ipdreams.core import all_partial_permutations  # noqa: E402
from ipdreams.dreams import Mode  # noqa: E402


def to_sympy(w):
    total = 0
    for mono, c in w.terms.items():
        term = sp.Integer(c)
        for i, e in mono:
            term *= E[i - 1] ** (-e)
        total += term
    return sp.expand(total)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    args = ap.parse_args()
    bad = checked = 0
    t = time.perf_counter()
    for f in all_partial_permutations(args.n):
        if f.k in (0, f.n):
            continue
        oracle = expand_by_localization(f.dots, f.k, f.n)
        ours = {lam: to_sympy(w) for lam, w in expand(f, Mode.KT).terms.items()}
        checked += 1
        same = set(oracle) == set(ours) and all(sp.simplify(ours[l] - oracle[l]) == 0 for l in ours)
        if not same:
            bad += 1
            print(f"MISMATCH {f}: ours {ours} oracle {oracle}")
    print(f"{checked} classes checked, {bad} mismatches, {time.perf_counter() - t:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
