"""Combinatorial shifting, fixed-point matroids, Monk and safe-shift components."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .core import (
    BoundedAffinePermutation,
    PartialPermutation,
    affine_length,
    essential_boxes,
    extend_to_juggling,
    restrict_to_triangle,
    k_subsets,
    swap_rows,
)


@dataclass(frozen=True)
class ShiftOp:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("a shift needs i != j")

    def element(self, m: int) -> int:
        return self.j if m == self.i else m


@dataclass(frozen=True)
class Collection:
    n: int
    k: int
    subsets: frozenset

    def __post_init__(self):
        for S in self.subsets:
            if len(S) != self.k or not all(1 <= m <= self.n for m in S):
                raise ValueError(f"bad member {sorted(S)}")

    @classmethod
    def of(cls, n: int, k: int, subsets: Iterable) -> "Collection":
        return cls(n, k, frozenset(frozenset(S) for S in subsets))

    def __len__(self):
        return len(self.subsets)

    def __or__(self, other: "Collection") -> "Collection":
        return Collection(self.n, self.k, self.subsets | other.subsets)

    def sorted(self) -> list:
        return sorted(sorted(S) for S in self.subsets)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "bases": self.sorted()}


def shift_set(op: ShiftOp, S) -> frozenset:
    S = frozenset(S)
    if op.i in S and op.j not in S:
        return (S - {op.i}) | {op.j}
    return S


def shift_collection(op: ShiftOp, C: Collection) -> Collection:
    out = set()
    for S in C.subsets:
        T = shift_set(op, S)
        out.add(T if T not in C.subsets else S)
    return Collection(C.n, C.k, frozenset(out))


# ---------------------------------------------------------------- matroids


def max_matching(dots, S) -> int:
    """Size of a maximum matching of dots (a, b) into S, with a <= m <= b."""
    S = sorted(S)
    owner: dict = {}

    def augment(d, seen):
        a, b = d
        for m in S:
            if a <= m <= b and m not in seen:
                seen.add(m)
                if m not in owner or augment(owner[m], seen):
                    owner[m] = d
                    return True
        return False

    return sum(1 for d in dots if augment(d, set()))


def matchable(dots, S) -> bool:
    return max_matching(dots, S) == len(dots)


def hall_matchable(dots, S, n: int) -> bool:
    """Interval form of Hall's condition for interval-constrained matchings."""
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            inside = sum(1 for x, y in dots if a <= x and y <= b)
            if sum(1 for m in S if a <= m <= b) < inside:
                return False
    return True


def greedy_matchable(dots, S) -> bool:
    """Earliest-deadline greedy: each dot takes the smallest free m >= its row."""
    free = sorted(S)
    for a, b in sorted(dots, key=lambda d: (d[1], d[0])):
        pick = next((m for m in free if a <= m <= b), None)
        if pick is None:
            return False
        free.remove(pick)
    return True


def matroid_of(f: PartialPermutation) -> Collection:
    n, k = f.n, f.k
    full = frozenset(range(1, n + 1))
    bases = [B for B in k_subsets(n, k) if matchable(f.dots, full - B)]
    return Collection.of(n, k, bases)


def matroid_of_pattern(J: BoundedAffinePermutation) -> Collection:
    """k-subsets meeting every cyclic interval in at most its rank."""
    n, k = J.n, J.k
    conds = []
    for a in range(1, n + 1):
        for b in range(a, a + n - 1):
            r = J.rank(a, b)
            if r < b - a + 1:
                conds.append(({(m - 1) % n + 1 for m in range(a, b + 1)}, r))
    bases = [B for B in k_subsets(n, k) if all(len(B & I) <= r for I, r in conds)]
    return Collection.of(n, k, bases)


def satisfies_rank_bound(B, interval: set, bound: int) -> bool:
    return len(set(B) & interval) <= bound


def cyclic_interval(a: int, b: int, n: int) -> set:
    return {(m - 1) % n + 1 for m in range(a, b + 1)}


# ---------------------------------------------------------------- Monk


def minimal_nw_dots(J: BoundedAffinePermutation, i: int, j: int, min_col: Optional[int] = None) -> list:
    """Dots of J strictly NW of (i, j) with no other such dot to their SE.

    Returned as (row, column) sorted by column.
    """
    n = J.n
    cands = [(a, J(a)) for a in range(j - 2 * n, i) if J(a) < j]
    if min_col is not None:
        cands = [d for d in cands if d[1] >= min_col]
    pool = [(a, J(a)) for a in range(j - 2 * n, i) if J(a) < j]
    minimal = [(a, c) for a, c in cands if not any(a < a2 and c < c2 for a2, c2 in pool)]
    return sorted(minimal, key=lambda d: d[1])


def monk_components(J: BoundedAffinePermutation, i: int) -> list:
    """Components of Π_J cut by lowering the rank of [i, J(i) - 1] by one."""
    j = J(i)
    out = []
    for a, _ in minimal_nw_dots(J, i, j):
        new = swap_rows(J, a, i)
        if new is not None:
            out.append(new)
    return out


# ---------------------------------------------------------------- safe shifts


def triangle_essential(J: BoundedAffinePermutation) -> dict:
    """Essential boxes of the interval conditions of J inside the triangle."""
    return essential_boxes(restrict_to_triangle(J))


def is_safe(J: BoundedAffinePermutation, i: int, j: int) -> bool:
    for a, b in triangle_essential(J):
        if a <= i <= b or not (a <= j <= b) or (a, b) == (i + 1, j):
            continue
        return False
    return True


def is_nontrivial_shift(J: BoundedAffinePermutation, i: int, j: int) -> bool:
    return i < j and (i + 1, j) in triangle_essential(J)


@dataclass(frozen=True)
class SafeShift:
    J: BoundedAffinePermutation
    i: int
    j: int
    sweep: BoundedAffinePermutation
    dots: tuple  # minimally NW dots of the sweep, by column
    components: tuple
    intersections: dict  # tuple of component indices -> pattern

    def to_json(self) -> dict:
        return {
            "pattern": self.J.to_json(), "i": self.i, "j": self.j,
            "sweep": self.sweep.to_json(),
            "components": [c.to_json() for c in self.components],
            "intersections": [
                {"sublist": list(k), "pattern": v.to_json()}
                for k, v in sorted(self.intersections.items())],
        }


def cycle_pattern(sweep: BoundedAffinePermutation, i: int, dots) -> Optional[BoundedAffinePermutation]:
    """Row i takes the first column, each dot's row takes the next column,
    and the last dot's row takes the column of row i. Dots are SW to NE."""
    n = sweep.n
    rows = [i] + [a for a, _ in dots]
    cols = [c for _, c in dots] + [sweep(i)]
    assign = {}
    for r, c in zip(rows, cols):
        q, res = divmod(r - 1, n)
        if res in assign:
            return None
        assign[res] = c - q * n
    window = tuple(assign.get(t, sweep.window[t]) for t in range(n))
    try:
        return BoundedAffinePermutation(n, window)
    except ValueError:
        return None


def safe_shift_components(J: BoundedAffinePermutation, i: int, j: int) -> SafeShift:
    if not is_safe(J, i, j):
        raise ValueError(f"shift {i}->{j} is not safe for {J}")
    if not is_nontrivial_shift(J, i, j):
        return SafeShift(J, i, j, J, (), (J,), {(0,): J})
    a = J.inverse(j)
    sweep = swap_rows(J, i, a)
    if sweep is None:
        raise ValueError("sweep is not bounded")
    dots = tuple(minimal_nw_dots(sweep, i, j, min_col=i))
    comps = []
    for d in dots:
        c = cycle_pattern(sweep, i, [d])
        if c is None:
            raise ValueError(f"component through {d} is not bounded")
        comps.append(c)
    inter = {}
    for size in range(1, len(dots) + 1):
        for idx in combinations(range(len(dots)), size):
            p = cycle_pattern(sweep, i, [dots[t] for t in idx])
            if p is None:
                raise ValueError(f"intersection {idx} is not bounded")
            inter[idx] = p
    return SafeShift(J, i, j, sweep, dots, tuple(comps), inter)


@dataclass
class FixedPointReport:
    ok: bool
    shifted: Collection
    union: Collection
    only_shifted: list
    only_union: list

    def __bool__(self):
        return self.ok


def tconvex_fixed_point_check(J: BoundedAffinePermutation, i: int, j: int) -> FixedPointReport:
    sh = safe_shift_components(J, i, j)
    shifted = shift_collection(ShiftOp(i, j), matroid_of_pattern(J))
    union = Collection(J.n, J.k, frozenset())
    for c in sh.components:
        union = union | matroid_of_pattern(c)
    a = sorted(sorted(S) for S in shifted.subsets - union.subsets)
    b = sorted(sorted(S) for S in union.subsets - shifted.subsets)
    return FixedPointReport(not a and not b, shifted, union, a, b)


def pattern_length(J: BoundedAffinePermutation) -> int:
    return affine_length(J)


def juggling(f) -> BoundedAffinePermutation:
    return f if isinstance(f, BoundedAffinePermutation) else extend_to_juggling(f)
