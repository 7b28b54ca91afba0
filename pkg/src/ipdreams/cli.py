"""Command-line interface.

    ipdreams expand  --perm '{"n":4,"dots":[[1,2],[3,4]]}' --mode KT
    ipdreams dreams  --perm ... --mode HT --render ascii
    ipdreams puzzles --nw 0101 --ne 0101 --s 0011 --equivariant
    ipdreams shift   --perm ... --i 2 --j 4
    ipdreams matroid --perm ...
    ipdreams monk    --pattern '{"n":4,"window":[2,4,5,7]}' --row 3
    ipdreams verify  --suite figures --max-n 4

JSON arguments may be given inline or as @path. Exit codes: 2 for bad
flags or inputs, 1 for a failed verification, 0 otherwise.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classes import expand, wt_H, wt_K
from .core import BoundedAffinePermutation, PartialPermutation, extend_to_juggling
from .dreams import Kind, Mode, PipeDream, enumerate_dreams
from .puzzles import PuzzleBoundary, enumerate_puzzles
from .shifts import is_safe, matroid_of_pattern, monk_components, safe_shift_components
from .verify import SUITES, run_suite


class InputError(ValueError):
    pass


GLYPH = {Kind.CROSSING: "+", Kind.DOT: "o", Kind.EQUIVARIANT: "e",
         Kind.FUSOR: "f", Kind.DISPLACER: "d"}


def render_dream(P: PipeDream) -> list:
    """Three text lines per row: North label, West/kind/East, South label."""
    n = P.n
    width = max(len(w) for _, t in P.tiles for w in (t.east, t.west))
    cell = 2 * width + 3
    lines = []
    for i in range(1, n + 1):
        top, mid, bot = [], [], []
        for j in range(1, n + 1):
            if j < i:
                top.append(" " * cell)
                mid.append(" " * cell)
                bot.append(" " * cell)
                continue
            t = P.tile(i, j)
            top.append(t.north.center(cell))
            mid.append("".join(t.west).rjust(width) + " " + GLYPH[t.kind] + " "
                       + "".join(t.east).ljust(width))
            bot.append(t.south.center(cell))
        for row in (top, mid, bot):
            lines.append("|".join(row).rstrip())
    return lines


def _load_json(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from None


def parse_input(text: str):
    """A partial permutation {"n", "dots"} or a bounded pattern {"n", "window"}."""
    data = _load_json(text)
    try:
        if "window" in data:
            return BoundedAffinePermutation(int(data["n"]), tuple(int(v) for v in data["window"]))
        return PartialPermutation.from_dots(int(data["n"]), [tuple(d) for d in data["dots"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad permutation: {exc}") from None


def as_pattern(x) -> BoundedAffinePermutation:
    return x if isinstance(x, BoundedAffinePermutation) else extend_to_juggling(x)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _weight(P: PipeDream, mode: Mode):
    if mode is Mode.HT:
        return wt_H(P)
    if mode is Mode.KT:
        return wt_K(P)
    return 1


def cmd_expand(args) -> int:
    e = expand(parse_input(args.perm), args.mode)
    print(_dump(e.to_json()))
    return 0


def cmd_dreams(args) -> int:
    f = parse_input(args.perm)
    if isinstance(f, BoundedAffinePermutation):
        raise InputError("dreams needs a partial permutation")
    mode = Mode(args.mode)
    out = []
    for idx, P in enumerate(enumerate_dreams(f, mode)):
        sign = (-1) ** P.fusing if mode.ktheory else 1
        w = _weight(P, mode)
        if args.render == "json":
            out.append({"index": idx, "partition": list(P.lam), "sign": sign,
                        "fusing": P.fusing, "weight": w if isinstance(w, int) else w.to_json(),
                        "dream": P.to_json()})
            continue
        lam = "(" + ",".join(map(str, P.lam)) + ")"
        print(f"dream {idx}  lambda={lam}  sign={sign:+d}  weight={w}")
        for line in render_dream(P):
            print("  " + line)
        print()
    if args.render == "json":
        print(_dump(out))
    else:
        print(f"{len(enumerate_dreams(f, mode))} dreams")
    return 0


def cmd_puzzles(args) -> int:
    try:
        b = PuzzleBoundary(args.nw, args.ne, args.s)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    found = enumerate_puzzles(b, equivariant=args.equivariant)
    if args.render == "json":
        print(_dump({"boundary": {"nw": b.nw, "ne": b.ne, "s": b.s}, "count": len(found),
                     "weights": [w.to_json() for _, w in found],
                     "rhombi": [[list(r) for r in Z.rhombi] for Z, _ in found]}))
        return 0
    print(f"count: {len(found)}")
    for idx, (Z, w) in enumerate(found):
        print(f"puzzle {idx}  weight={w}")
        for line in Z.rows():
            print("  " + line)
    return 0


def cmd_shift(args) -> int:
    J = as_pattern(parse_input(args.perm))
    if not (1 <= args.i <= J.n and 1 <= args.j <= J.n):
        raise InputError("--i and --j must lie in [1, n]")
    if not is_safe(J, args.i, args.j):
        raise InputError(f"the shift {args.i}->{args.j} is not safe for {J}")
    print(_dump(safe_shift_components(J, args.i, args.j).to_json()))
    return 0


def cmd_matroid(args) -> int:
    J = as_pattern(parse_input(args.perm))
    print(_dump(matroid_of_pattern(J).to_json()))
    return 0


def cmd_monk(args) -> int:
    J = as_pattern(parse_input(args.pattern))
    if not 1 <= args.row <= J.n:
        raise InputError("--row must lie in [1, n]")
    comps = monk_components(J, args.row)
    print(_dump({"pattern": J.to_json(), "row": args.row,
                 "components": [c.to_json() for c in comps]}))
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for name in names:
        r = run_suite(name, args.max_n)
        ok = ok and r.ok
        if args.json:
            print(json.dumps(r.to_json()))
            continue
        status = "PASS" if r.ok else "FAIL"
        print(f"{name}: {status} ({r.checked} inputs, {len(r.failures)} failures, {r.seconds:.2f}s)")
        for msg in r.failures[:20]:
            print(f"  failure: {msg}")
        for msg in r.notes:
            print(f"  note: {msg}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ipdreams", description="Interval positroid pipe dreams.")
    sub = p.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    s = sub.add_parser("expand", help="Schubert expansion of a class")
    s.add_argument("--perm", required=True)
    s.add_argument("--mode", choices=modes, default="H")
    s.set_defaults(run=cmd_expand)

    s = sub.add_parser("dreams", help="list the pipe dreams of f")
    s.add_argument("--perm", required=True)
    s.add_argument("--mode", choices=modes, default="H")
    s.add_argument("--render", choices=["ascii", "json"], default="ascii")
    s.set_defaults(run=cmd_dreams)

    s = sub.add_parser("puzzles", help="puzzles with a given boundary")
    s.add_argument("--nw", required=True)
    s.add_argument("--ne", required=True)
    s.add_argument("--s", required=True)
    s.add_argument("--equivariant", action="store_true")
    s.add_argument("--render", choices=["ascii", "json"], default="ascii")
    s.set_defaults(run=cmd_puzzles)

    s = sub.add_parser("shift", help="safe shift components")
    s.add_argument("--perm", required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.set_defaults(run=cmd_shift)

    s = sub.add_parser("matroid", help="bases of the fixed-point matroid")
    s.add_argument("--perm", required=True)
    s.set_defaults(run=cmd_matroid)

    s = sub.add_parser("monk", help="components of a Monk intersection")
    s.add_argument("--pattern", required=True)
    s.add_argument("--row", type=int, required=True)
    s.set_defaults(run=cmd_monk)

    s = sub.add_parser("verify", help="run the verification suites")
    s.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "max_n", None) is not None and args.max_n < 1:
        print("error: --max-n must be positive", file=sys.stderr)
        return 2
    try:
        return args.run(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
