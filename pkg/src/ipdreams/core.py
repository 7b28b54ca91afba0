"""Partial permutations, bounded juggling patterns, rank matrices and diagrams.

All indices are 1-based. A partial permutation f of [n] is upper triangular:
a dot at (i, j) means f(i) = j with j >= i. Its Grassmannian is Gr_k(n)
with k = n - rank(f).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterator, Optional

Box = tuple[int, int]
Partition = tuple[int, ...]


def normalize_partition(parts) -> Partition:
    """Drop trailing zeros; check weakly decreasing."""
    out = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in out) or any(a < b for a, b in zip(out, out[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return out


def fits_box(lam: Partition, k: int, cols: int) -> bool:
    return len(lam) <= k and all(p <= cols for p in lam)


def complement(lam: Partition, k: int, cols: int) -> Partition:
    """Complement of lam in the k x cols rectangle, rotated by 180 degrees."""
    padded = list(lam) + [0] * (k - len(lam))
    return normalize_partition(cols - p for p in reversed(padded))


def partition_from_steps(steps) -> Partition:
    """Partition cut out by a lattice path read as a sequence of moves.

    Each step is 'R' (right) or 'U' (up); the path starts at the bottom
    left of the box. Row lengths are the x-positions of the up moves,
    listed from the top row down.
    """
    x = 0
    rows = []
    for s in steps:
        if s == "R":
            x += 1
        else:
            rows.append(x)
    return normalize_partition(reversed(rows))


@dataclass(frozen=True)
class PartialPermutation:
    n: int
    target: tuple  # target[i-1] is f(i) or None

    def __post_init__(self):
        if self.n < 1 or len(self.target) != self.n:
            raise ValueError("target must have length n >= 1")
        seen = set()
        for i, t in enumerate(self.target, start=1):
            if t is None:
                continue
            if not (i <= t <= self.n):
                raise ValueError(f"f({i}) = {t} is not in [{i}, {self.n}]")
            if t in seen:
                raise ValueError(f"value {t} repeated")
            seen.add(t)

    @classmethod
    def from_dots(cls, n: int, dots) -> "PartialPermutation":
        target = [None] * n
        for a, b in dots:
            if not 1 <= a <= n:
                raise ValueError(f"row {a} out of range")
            if target[a - 1] is not None:
                raise ValueError(f"row {a} used twice")
            target[a - 1] = int(b)
        return cls(n, tuple(target))

    @classmethod
    def empty(cls, n: int) -> "PartialPermutation":
        return cls(n, (None,) * n)

    @classmethod
    def identity(cls, n: int) -> "PartialPermutation":
        return cls(n, tuple(range(1, n + 1)))

    def __call__(self, i: int) -> Optional[int]:
        return self.target[i - 1]

    @cached_property
    def dots(self) -> tuple[Box, ...]:
        return tuple((i, t) for i, t in enumerate(self.target, start=1) if t is not None)

    @property
    def rank(self) -> int:
        return len(self.dots)

    @property
    def k(self) -> int:
        return self.n - self.rank

    def inverse_map(self) -> dict[int, int]:
        return {b: a for a, b in self.dots}

    def to_json(self) -> dict:
        return {"n": self.n, "dots": [list(d) for d in self.dots]}

    def __str__(self):
        body = ", ".join(f"{a}->{b}" for a, b in self.dots)
        return f"f[n={self.n}]({body})"


def all_partial_permutations(n: int) -> Iterator[PartialPermutation]:
    """Every upper-triangular partial permutation of [n], in a fixed order."""

    def rec(i, used, acc):
        if i > n:
            yield PartialPermutation(n, tuple(acc))
            return
        yield from rec(i + 1, used, acc + [None])
        for j in range(i, n + 1):
            if j not in used:
                yield from rec(i + 1, used | {j}, acc + [j])

    yield from rec(1, frozenset(), [])


@dataclass(frozen=True)
class RankMatrix:
    n: int
    r: tuple  # r[i-1][j-1] for i <= j, None below the diagonal

    def __call__(self, i: int, j: int) -> int:
        if j < i:
            return 0
        return self.r[i - 1][j - 1]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield i, j, self(i, j)


def rank_matrix_of(f: PartialPermutation) -> RankMatrix:
    n = f.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j < i:
                row.append(None)
            else:
                sw = sum(1 for a, b in f.dots if a >= i and b <= j)
                row.append(j - i + 1 - sw)
        rows.append(tuple(row))
    return RankMatrix(n, tuple(rows))


@dataclass(frozen=True)
class BoundedAffinePermutation:
    n: int
    window: tuple

    def __post_init__(self):
        n = self.n
        if n < 1 or len(self.window) != n:
            raise ValueError("window must have length n >= 1")
        for i, v in enumerate(self.window, start=1):
            if not (i <= v <= i + n):
                raise ValueError(f"J({i}) = {v} is not bounded")
        if len({v % n for v in self.window}) != n:
            raise ValueError("window residues are not distinct")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def inverse(self, c: int) -> int:
        return self._inv_window[(c - 1) % self.n] + ((c - 1) // self.n) * self.n

    @cached_property
    def _inv_window(self) -> tuple:
        # inverse values for columns 1..n
        n = self.n
        inv = [0] * n
        for i, v in enumerate(self.window, start=1):
            c = (v - 1) % n + 1
            inv[c - 1] = i - (v - c)
        return tuple(inv)

    @property
    def k(self) -> int:
        return sum(v - i for i, v in enumerate(self.window, start=1)) // self.n

    @property
    def siteswap(self) -> tuple:
        return tuple(v - i for i, v in enumerate(self.window, start=1))

    def rank(self, i: int, j: int) -> int:
        """Rank of the column interval [i, j], for i <= j <= i + n (cyclic)."""
        if j < i:
            return 0
        if j >= i + self.n:
            return self.k
        return j - i + 1 - sum(1 for a in range(i, j + 1) if self(a) <= j)

    def in_diagram(self, a: int, c: int) -> bool:
        return a <= c <= a + self.n and self(a) <= c and self.inverse(c) >= a

    @cached_property
    def essential(self) -> dict:
        """NE corners of the diagram, with rows in [1, n]; value is the rank bound."""
        out = {}
        n = self.n
        for a in range(1, n + 1):
            for c in range(a, a + n):
                if not self.in_diagram(a, c):
                    continue
                if self.in_diagram(a - 1, c):
                    continue
                if c + 1 <= a + n and self.in_diagram(a, c + 1):
                    continue
                out[(a, c)] = self.rank(a, c)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "window": list(self.window)}

    def __str__(self):
        return f"J[n={self.n}]{self.window}"


def extend_to_juggling(f: PartialPermutation) -> BoundedAffinePermutation:
    n = f.n
    used_cols = {b for _, b in f.dots}
    free_rows = [i for i in range(1, n + 1) if f(i) is None]
    free_cols = [c for c in range(1, n + 1) if c not in used_cols]
    window = list(f.target)
    for r, c in zip(free_rows, free_cols):
        window[r - 1] = c + n
    return BoundedAffinePermutation(n, tuple(window))


def is_interval_pattern(J: BoundedAffinePermutation) -> bool:
    """True when J is the extension of its first-triangle restriction."""
    return extend_to_juggling(restrict_to_triangle(J)) == J


def restrict_to_triangle(J: BoundedAffinePermutation) -> PartialPermutation:
    return PartialPermutation(J.n, tuple(v if v <= J.n else None for v in J.window))


def affine_length(J: BoundedAffinePermutation) -> int:
    n = J.n
    total = 0
    for i in range(1, n + 1):
        Ji = J(i)
        for j in range(i + 1, Ji):
            if J(j) < Ji:
                total += 1
    return total


def dimension(f) -> int:
    J = f if isinstance(f, BoundedAffinePermutation) else extend_to_juggling(f)
    return J.k * (J.n - J.k) - affine_length(J)


def in_interval_diagram(f: PartialPermutation, a: int, c: int) -> bool:
    """Box (a, c) of the triangle survives crossing out.

    Boxes strictly West or South of a dot are crossed out, as are dotless
    rows and columns.
    """
    if not (1 <= a <= c <= f.n):
        return False
    fa = f(a)
    if fa is None or fa > c:
        return False
    row = f.inverse_map().get(c)
    return row is not None and row >= a


def essential_boxes(f: PartialPermutation) -> dict:
    """Essential boxes of f mapped to their rank bounds.

    A bound of k on an interval longer than k holds on all of Gr_k(n), so
    such boxes are left out.
    """
    r = rank_matrix_of(f)
    out = {}
    for a in range(1, f.n + 1):
        for c in range(a, f.n + 1):
            if not in_interval_diagram(f, a, c):
                continue
            if in_interval_diagram(f, a - 1, c) or in_interval_diagram(f, a, c + 1):
                continue
            if r(a, c) >= f.k:
                continue
            out[(a, c)] = r(a, c)
    return out


def swap_rows(J: BoundedAffinePermutation, a: int, b: int) -> Optional[BoundedAffinePermutation]:
    """Exchange the dots in rows a and b (and their periodic copies).

    Returns None when the result is not bounded.
    """
    n = J.n
    if (a - b) % n == 0:
        return None
    vals = {}
    for row, new in ((a, J(b)), (b, J(a))):
        q, r = divmod(row - 1, n)
        vals[r] = new - q * n
    window = tuple(vals.get(i, J.window[i]) for i in range(n))
    try:
        return BoundedAffinePermutation(n, window)
    except ValueError:
        return None


def bruhat_covers_up(J: BoundedAffinePermutation) -> list:
    """Patterns of length one less, by making a NE/SW pair of dots NW/SE.

    Each entry is (J'', ((r0, r1), (c0, c1))) where the rank of J'' exceeds
    that of J by one exactly on rows r0..r1 and columns c0..c1.
    """
    n = J.n
    out = []
    for a in range(1, n + 1):
        Ja = J(a)
        for b in range(a + 1, Ja + 1):
            Jb = J(b)
            if Jb >= Ja:
                continue
            if any(Jb < J(c) < Ja for c in range(a + 1, b)):
                continue
            new = swap_rows(J, a, b)
            if new is None:
                continue
            out.append((new, ((a + 1, b), (Jb, Ja - 1))))
    out.sort(key=lambda t: t[0].window)
    return out


def bruhat_covers_down(J: BoundedAffinePermutation) -> list:
    """Patterns of length one more, by making a NW/SE pair of dots NE/SW."""
    n = J.n
    out = []
    for a in range(1, n + 1):
        Ja = J(a)
        for b in range(a + 1, a + n + 1):
            Jb = J(b)
            if Jb <= Ja:
                continue
            if any(Ja < J(c) < Jb for c in range(a + 1, b)):
                continue
            new = swap_rows(J, a, b)
            if new is not None:
                out.append(new)
    return sorted(set(out), key=lambda t: t.window)


def all_bounded_patterns(n: int, k: Optional[int] = None) -> Iterator[BoundedAffinePermutation]:
    for perm in permutations(range(n)):
        # J(i) = i + s_i with s_i in [0, n]; choose representative by residue
        window = []
        for i, r in enumerate(perm, start=1):
            c = r + 1
            opts = [v for v in (c, c + n, c + 2 * n) if i <= v <= i + n]
            window.append(opts)
        for choice in _product(window):
            J = BoundedAffinePermutation(n, tuple(choice))
            if k is None or J.k == k:
                yield J


def _product(lists):
    if not lists:
        yield ()
        return
    for v in lists[0]:
        for rest in _product(lists[1:]):
            yield (v,) + rest


def dots_nw_se(dots) -> bool:
    """True when the dots, sorted by row, have increasing columns."""
    ds = sorted(dots)
    return all(b1 < b2 for (_, b1), (_, b2) in zip(ds, ds[1:]))


def opposite_schubert_partition(f: PartialPermutation) -> Optional[Partition]:
    """λ with Π_f the opposite Schubert variety X^λ, when f has that shape."""
    rows = sorted(a for a, _ in f.dots)
    if rows != list(range(1, f.rank + 1)) or not dots_nw_se(f.dots):
        return None
    return _column_partition(f)


def _column_partition(f: PartialPermutation) -> Partition:
    cols = {b for _, b in f.dots}
    return partition_from_steps("R" if c in cols else "U" for c in range(f.n, 0, -1))


def _row_partition(f: PartialPermutation) -> Partition:
    rows = {a for a, _ in f.dots}
    return partition_from_steps("R" if a in rows else "U" for a in range(1, f.n + 1))


def richardson_envelope(J: BoundedAffinePermutation) -> tuple:
    """(μ, ν, is_exact): the smallest Richardson X_μ ∩ X^ν containing Π_J.

    Both partitions are indexed by dimension.
    """
    f = restrict_to_triangle(J)
    n = J.n
    right = [(a, J(a)) for a in range(1, n + 1) if J(a) > n]
    exact = dots_nw_se(f.dots) and dots_nw_se(right)
    return _row_partition(f), _column_partition(f), exact


def k_subsets(n: int, k: int) -> list:
    return [frozenset(c) for c in combinations(range(1, n + 1), k)]
