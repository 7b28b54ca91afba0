"""Run every verification suite and write a JSON summary.

Usage: python scripts/run_suites.py [--out results/suites.json] [--max-n N]
PIPES_THREADS caps the number of worker processes.
"""
import argparse
import json
import sys
from pathlib import Path

from ipdreams.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/suites.json")
    ap.add_argument("--max-n", type=int, default=None)
    args = ap.parse_args()
    results = []
    for name in SUITES:
        r = run_suite(name, args.max_n)
        print(f"{name:<11} {'PASS' if r.ok else 'FAIL'} {r.checked:>6} inputs {r.seconds:7.2f}s")
        results.append(r.to_json())
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(results, indent=2))
    return 0 if all(r["ok"] for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
