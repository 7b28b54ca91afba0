"""Equivariant puzzles, their bijection with one-letter pipe dreams, and an
LR tableau oracle.

Puzzle coordinates: a point (x, y) with x, y >= 0 and x + y <= n, where x
runs along the South side and y along the Northwest side. Edge kinds:

  ("h", x, y): (x, y) -- (x+1, y)      horizontal
  ("l", x, y): (x, y) -- (x, y+1)      parallel to the NW side
  ("r", x, y): (x+1, y) -- (x, y+1)    parallel to the NE side

The up triangle U(x, y) has edges l(x, y), r(x, y), h(x, y), listed
clockwise. The down triangle D(x, y) has h(x, y+1), l(x+1, y), r(x, y),
also clockwise. The equivariant rhombus is U(x, y) on top of D(x, y-1).

Dream tile (i, j) sits on U(i-1, j-i) and, off the diagonal, D(i-1, j-i-1).
North and South labels are copied; East and West labels p become rho(p)
with rho: R -> 1 -> 0 -> R.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .classes import YPolynomial, y
from .core import PartialPermutation, Partition, dots_nw_se, normalize_partition
from .dreams import (
    ONE,
    ZERO,
    ZW,
    Kind,
    PipeDream,
    Tile,
    hnode,
    is_letter,
    letter,
    pipe_components,
    vnode,
    vakil_order,
)

R = "R"
TRIANGLES = {("0", "0", "0"), ("1", "1", "1"), ("0", R, "1"), (R, "1", "0"), ("1", "0", R)}
RHO = {R: ONE, ONE: ZERO, ZERO: R}
RHO_INV = {v: k for k, v in RHO.items()}
# equivariant rhombus labels: U left, U right, D left, D right
RHOMBUS = ("0", "1", "1", "0")


def valid_triangle(a: str, b: str, c: str) -> bool:
    return (a, b, c) in TRIANGLES


@dataclass(frozen=True)
class PuzzleBoundary:
    nw: str  # NW side, from the SW corner up
    ne: str  # NE side, from the top corner down
    s: str  # S side, left to right

    def __post_init__(self):
        n = len(self.nw)
        if not (len(self.ne) == len(self.s) == n) or n < 1:
            raise ValueError("boundary strings must have equal positive length")
        for side in (self.nw, self.ne, self.s):
            if set(side) - {"0", "1"}:
                raise ValueError("boundary strings are binary")
        if not (self.nw.count("1") == self.ne.count("1") == self.s.count("1")):
            raise ValueError("each side needs the same number of 1s")

    @property
    def n(self) -> int:
        return len(self.nw)

    @property
    def k(self) -> int:
        return self.nw.count("1")


@dataclass(frozen=True)
class Puzzle:
    n: int
    labels: tuple  # sorted (edge, label); rhombus interiors omitted
    rhombi: tuple  # U positions (x, y) of equivariant rhombi

    @cached_property
    def edge(self) -> dict:
        return dict(self.labels)

    @property
    def boundary(self) -> PuzzleBoundary:
        n = self.n
        nw = "".join(self.edge[("l", 0, t)] for t in range(n))
        ne = "".join(self.edge[("r", t, n - 1 - t)] for t in range(n))
        s = "".join(self.edge[("h", t, 0)] for t in range(n))
        return PuzzleBoundary(nw, ne, s)

    @property
    def weight(self) -> YPolynomial:
        return puzzle_weight(self.rhombi)

    def rows(self) -> list:
        """ASCII rows from the top: each up triangle as left/bottom/right."""
        out = []
        for yy in range(self.n - 1, -1, -1):
            cells = []
            for x in range(self.n - yy):
                if (x, yy) in self.rhombi:
                    cells.append("<eq>")
                else:
                    e = self.edge
                    cells.append(e[("l", x, yy)] + e.get(("h", x, yy), "*") + e[("r", x, yy)])
            out.append(" " * (2 * yy) + " ".join(cells))
        return out


def puzzle_weight(rhombi) -> YPolynomial:
    # a rhombus with top at U(x, y) is x+1 steps from the NW side at its
    # East corner and n-(x+y+1) steps from the NE side at its top corner
    w = YPolynomial.const(1)
    for x, yy in rhombi:
        w = w * (y(x + 1) - y(x + yy + 1))
    return w


def enumerate_puzzles(b: PuzzleBoundary, equivariant: bool = True) -> list:
    """All puzzles with boundary b, with their weights."""
    n = b.n
    labels: dict = {}
    for t in range(n):
        labels[("h", t, 0)] = b.s[t]
    out = []
    # positions: row by row from the bottom, alternating U and D
    order = []
    for yy in range(n):
        for x in range(n - yy):
            order.append(("U", x, yy))
            if x + yy <= n - 2:
                order.append(("D", x, yy))

    rhombi: list = []

    def rec(pos):
        if pos == len(order):
            kept = sorted((e, v) for e, v in labels.items() if v != "*")
            Z = Puzzle(n, tuple(kept), tuple(sorted(rhombi)))
            out.append((Z, Z.weight))
            return
        kind, x, yy = order[pos]
        if kind == "U":
            left = ("l", x, yy)
            right = ("r", x, yy)
            bottom = labels[("h", x, yy)]
            if bottom == "*":
                opts = [(RHOMBUS[0], RHOMBUS[1])]
            else:
                opts = [(a, c) for a, c, d in TRIANGLES if d == bottom]
            for a, c in opts:
                if left in labels and labels[left] != a:
                    continue
                if x == 0 and b.nw[yy] != a:
                    continue
                if x + yy == n - 1 and b.ne[x] != c:
                    continue
                added = [e for e in (left,) if e not in labels]
                labels[left] = a
                labels[right] = c
                if bottom == "*":
                    rhombi.append((x, yy))
                rec(pos + 1)
                if bottom == "*":
                    rhombi.pop()
                del labels[right]
                for e in added:
                    del labels[e]
        else:
            top, right, left = ("h", x, yy + 1), ("l", x + 1, yy), ("r", x, yy)
            lval = labels[left]
            opts = [(t, r) for t, r, l in TRIANGLES if l == lval]
            if equivariant and lval == RHOMBUS[2]:
                opts.append(("*", RHOMBUS[3]))
            for t, r in opts:
                labels[top] = t
                labels[right] = r
                rec(pos + 1)
                del labels[top]
                del labels[right]

    rec(0)
    return out


def count_puzzles(b: PuzzleBoundary) -> int:
    return len(enumerate_puzzles(b, equivariant=False))


# ---------------------------------------------------------------- bijection


def _tile_label(x: str) -> str:
    return R if is_letter(x) else x


def dream_to_puzzle(P: PipeDream) -> Puzzle:
    if P.fusing or any(t.kind is Kind.DISPLACER for _, t in P.tiles):
        raise ValueError("K-theoretic dreams have no puzzle")
    if not dots_nw_se(P.f.dots):
        raise ValueError("dream needs more than one letter")
    labels: dict = {}
    rhombi = []
    for (i, j), t in P.tiles:
        x, yy = i - 1, j - i
        N, S = _tile_label(t.north), _tile_label(t.south)
        E, W = _tile_label(t.east[0]), _tile_label(t.west[0])
        labels[("l", x, yy)] = N
        labels[("r", x, yy)] = RHO_INV[E]
        if t.kind is Kind.EQUIVARIANT:
            rhombi.append((x, yy))
            labels[("l", x + 1, yy - 1)] = S
            labels[("r", x, yy - 1)] = RHO_INV[W]
            continue
        if i == j:
            d = {ONE: "1", R: "0"}[S]
        else:
            ds = [d for d in "01R" if valid_triangle(N, RHO_INV[E], d)
                  and valid_triangle(d, S, RHO_INV[W])]
            if len(ds) != 1:
                raise ValueError(f"tile at {(i, j)} has no puzzle piece")
            d = ds[0]
            labels[("l", x + 1, yy - 1)] = S
            labels[("r", x, yy - 1)] = RHO_INV[W]
        labels[("h", x, yy)] = d
    return Puzzle(P.n, tuple(sorted(labels.items())), tuple(sorted(rhombi)))


def puzzle_to_dream(Z: Puzzle) -> PipeDream:
    n = Z.n
    e = Z.edge
    rhombi = set(Z.rhombi)
    raw = {}
    for i, j in vakil_order(n):
        x, yy = i - 1, j - i
        N = e[("l", x, yy)]
        E = RHO[e[("r", x, yy)]]
        if (x, yy) in rhombi:
            raw[(i, j)] = (ZERO, E, N, ZERO)
            continue
        if i == j:
            S = {"1": ONE, "0": R}[e[("h", x, yy)]]
            W = ZERO
        else:
            S = e[("l", x + 1, yy - 1)]
            W = RHO[e[("r", x, yy - 1)]]
        raw[(i, j)] = (S, E, N, W)
    # reletter R pipes by the dot each one belongs to
    cols = [m for m in range(1, n + 1) if raw[(m, m)][0] == R]
    rows = [m for m in range(1, n + 1) if raw[(m, n)][1] == R]
    if len(cols) != len(rows):
        raise ValueError("unbalanced boundary")
    order = vakil_order(n)
    draft = PipeDream(n, tuple(
        ((i, j), Tile(*_draft_tile(raw[(i, j)]))) for i, j in order))
    find = pipe_components(draft)
    name = {}
    for m, c in enumerate(cols, start=1):
        name[find(hnode(c, c))] = letter(m)

    def lab(node, x):
        return name[find(node)] if x == R else x

    tiles = []
    for i, j in order:
        S, E, N, W = raw[(i, j)]
        tiles.append(((i, j), Tile(
            lab(hnode(i, j), S), (lab(vnode(i, j), E),),
            lab(hnode(i - 1, j), N), (lab(vnode(i, j - 1), W),))))
    return PipeDream(n, tuple(tiles))


def _draft_tile(lbls):
    S, E, N, W = lbls
    return S, (E,), N, (W,)


# ---------------------------------------------------------------- LR oracle


def lr_coefficient(lam, mu, nu, k: Optional[int] = None, n: Optional[int] = None) -> int:
    """c^nu_{lam, mu}, counting LR skew tableaux of shape nu/lam and content mu."""
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    lam_p = list(lam) + [0] * (len(nu) - len(lam))
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam_p[r] - 1, -1)]
    fill: dict = {}
    count = [0] * (len(mu) + 1)
    total = 0

    def rec(t):
        nonlocal total
        if t == len(cells):
            total += 1
            return
        r, c = cells[t]
        hi = fill.get((r, c + 1), len(mu))
        lo = fill.get((r - 1, c), 0) + 1 if (r - 1, c) in fill else 1
        for v in range(lo, hi + 1):
            if count[v] >= mu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            fill[(r, c)] = v
            count[v] += 1
            rec(t + 1)
            count[v] -= 1
            del fill[(r, c)]

    if mu:
        rec(0)
    else:
        total = 1 if lam == nu else 0
    return total


def north_string(lam: Partition, k: int, n: int) -> str:
    """Binary string whose m-th 1 has lam_m zeros to its right."""
    parts = list(lam) + [0] * (k - len(lam))
    s = []
    zeros_right = n - k
    for p in parts:
        while zeros_right > p:
            s.append("0")
            zeros_right -= 1
        s.append("1")
    s.extend("0" * zeros_right)
    return "".join(s)


def partition_of_string(s: str) -> Partition:
    return normalize_partition(s[m + 1:].count("0") for m, x in enumerate(s) if x == "1")


def boundary_of(f: PartialPermutation, lam: Partition) -> PuzzleBoundary:
    """Puzzle boundary of the dreams of f with North boundary read from lam."""
    rows = {a for a, _ in f.dots}
    cols = {b for _, b in f.dots}
    ne = "".join("0" if m in rows else "1" for m in range(1, f.n + 1))
    s = "".join("0" if m in cols else "1" for m in range(1, f.n + 1))
    return PuzzleBoundary(north_string(lam, f.k, f.n), ne, s)


def all_boundaries(n: int, k: int):
    from itertools import combinations
    strs = ["".join("1" if m in c else "0" for m in range(n)) for c in combinations(range(n), k)]
    for a in strs:
        for b in strs:
            for c in strs:
                yield PuzzleBoundary(a, b, c)


def boundary_for(lam, mu, nu, k: int, n: int) -> PuzzleBoundary:
    """Boundary whose nonequivariant puzzle count is c^nu_{lam, mu}."""
    return PuzzleBoundary(north_string(normalize_partition(lam), k, n),
                          north_string(normalize_partition(mu), k, n),
                          north_string(normalize_partition(nu), k, n))


def rotate(b: PuzzleBoundary) -> PuzzleBoundary:
    """Turn the triangle a third of the way round (clockwise reading)."""
    return PuzzleBoundary(b.ne, b.s[::-1], b.nw[::-1])
