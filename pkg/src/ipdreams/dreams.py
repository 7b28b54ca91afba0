"""Tiles, slices and the enumeration of (K-)IP pipe dreams.

Edge labels are strings: "0", "1", or a letter. Dot m of f (ordered by row)
owns the m-th letter of A..Z a..z. A vertical word is a tuple of labels;
("0",) is the zero word.

The grid is the upper triangle {(i, j) : 1 <= i <= j <= n}. Tiles are
placed in the order i = n..1, j = n..i. The slice at kink (i, j) holds one
horizontal edge per column and the East edges of the kink and of the
unfilled rows above it.
"""
from __future__ import annotations

import enum
import string
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional

from .core import PartialPermutation, Partition, normalize_partition

ZERO = "0"
ONE = "1"
ZW = (ZERO,)
LETTERS = string.ascii_uppercase + string.ascii_lowercase


def letter(m: int) -> str:
    return LETTERS[m - 1]


def is_letter(x: str) -> bool:
    return x not in (ZERO, ONE)


def valid_word(w: tuple) -> bool:
    if w == ZW:
        return True
    if not w or ZERO in w or len(set(w)) != len(w):
        return False
    return ONE not in w[:-1]


class Mode(str, enum.Enum):
    H = "H"
    HT = "HT"
    K = "K"
    KT = "KT"

    @property
    def equivariant(self) -> bool:
        return self in (Mode.HT, Mode.KT)

    @property
    def ktheory(self) -> bool:
        return self in (Mode.K, Mode.KT)


class Kind(str, enum.Enum):
    CROSSING = "crossing"
    DOT = "dot"
    EQUIVARIANT = "equivariant"
    FUSOR = "fusor"
    DISPLACER = "displacer"


def classify(south: str, east: tuple, north: str, west: tuple) -> Optional[Kind]:
    if not (valid_word(east) and valid_word(west)):
        return None
    if south == ZERO and east == ZW:
        if west == ZW:
            return Kind.EQUIVARIANT if north == ZERO else None
        return Kind.FUSOR if north == west[-1] else None
    if east == (south,):
        return Kind.DOT if north == ZERO and west == ZW else None
    if len(east) >= 2 and east[-1] == south:
        if west == east[:-1] and north == west[-1]:
            return Kind.DISPLACER
        return None
    if north == south and west == east and south not in east:
        if ONE in east and south != ZERO:
            return None
        return Kind.CROSSING
    return None


@dataclass(frozen=True)
class Tile:
    south: str
    east: tuple
    north: str
    west: tuple

    def __post_init__(self):
        if classify(self.south, self.east, self.north, self.west) is None:
            raise ValueError(f"not a tile: {self}")

    @property
    def kind(self) -> Kind:
        return classify(self.south, self.east, self.north, self.west)

    @property
    def fused_count(self) -> int:
        return len(self.west) - 1 if self.kind is Kind.FUSOR else 0

    def to_json(self) -> dict:
        return {"south": self.south, "east": list(self.east),
                "north": self.north, "west": list(self.west)}


def allowed_in(tile: Tile, mode: Mode) -> bool:
    if tile.kind is Kind.EQUIVARIANT:
        return mode.equivariant
    if tile.kind is Kind.FUSOR and len(tile.west) > 1:
        return mode.ktheory
    return True


# ---------------------------------------------------------------- slices


@dataclass(frozen=True)
class Slice:
    n: int
    i: int
    j: int
    horiz: tuple  # label of the slice edge in column m, m = 1..n
    vert: tuple  # East boundary words of rows 1..i-1
    kink: tuple  # East word of the kink; () at the terminal slice

    @property
    def terminal(self) -> bool:
        return self.i == 0

    def h(self, m: int) -> str:
        return self.horiz[m - 1]

    def row_of(self, m: int) -> int:
        """Row of the tile directly above the slice edge in column m."""
        if m < self.i:
            return m
        if m <= self.j:
            return self.i
        return self.i - 1

    def to_json(self) -> dict:
        return {"n": self.n, "kink": [self.i, self.j], "horizontal": list(self.horiz),
                "vertical": [list(w) for w in self.vert], "kink_word": list(self.kink)}


def initial_slice(f: PartialPermutation) -> Slice:
    n = f.n
    horiz = [ONE] * n
    vert = [ZW] * n
    for m, (a, b) in enumerate(f.dots, start=1):
        horiz[b - 1] = letter(m)
        vert[a - 1] = (letter(m),)
    return Slice(n, n, n, tuple(horiz), tuple(vert[:-1]), vert[-1])


def _forced_walk(s: Slice) -> Optional[Slice]:
    """Reduce a multi-letter kink word by the forced West walk.

    Returns the slice reached once the word is a single label, or None if
    the walk fails.
    """
    while len(s.kink) > 1:
        c = s.h(s.j)
        V = s.kink
        if c == ZERO or c not in V:
            if V[-1] == ONE and c != ZERO:
                return None
            tile = Tile(c, V, c, V)
        elif V[-1] == c:
            tile = Tile(c, V, V[-2], V[:-1])
        else:
            return None
        s = advance(s, tile)
        if s is None:
            return None
    return s


def advance(s: Slice, tile: Tile) -> Optional[Slice]:
    """Slice after placing tile at the kink of s, or None at a bad diagonal."""
    i, j = s.i, s.j
    horiz = list(s.horiz)
    horiz[j - 1] = tile.north
    if j > i:
        return Slice(s.n, i, j - 1, tuple(horiz), s.vert, tile.west)
    if tile.west != ZW:
        return None
    if i == 1:
        return Slice(s.n, 0, s.n, tuple(horiz), (), ())
    return Slice(s.n, i - 1, s.n, tuple(horiz), s.vert[:-1], s.vert[-1])


def _slice_dots(s: Slice) -> Optional[list]:
    """Labeled dots (row, col, label) of a slice with a single-label kink."""
    if len(s.kink) > 1:
        s2 = _forced_walk(s)
        return None if s2 is None else _slice_dots(s2)
    n, i, j = s.n, s.i, s.j
    verts = [(m, n, w[0]) for m, w in enumerate(s.vert, start=1)]
    if not s.terminal:
        verts.append((i, j, s.kink[0]))
    dots = []
    # lettered dots: walking the slice from its West end, a vertical edge
    # closes the nearest open horizontal edge of the same letter
    path = [(m, None) for m in range(1, n + 1)]
    if not s.terminal:
        path.insert(j, (None, (i, j, s.kink[0])))
    path.extend((None, v) for v in reversed(verts[: len(s.vert)]))
    stacks: dict = {}
    for m, v in path:
        if m is not None:
            if is_letter(s.h(m)):
                stacks.setdefault(s.h(m), []).append((s.row_of(m), m))
            continue
        vr, vc, A = v
        if not is_letter(A):
            continue
        if not stacks.get(A):
            return None
        hr, hc = stacks[A].pop()
        if not (vr <= hr and hc <= vc):
            return None
        dots.append((vr, hc, A))
    if any(stacks.values()):
        return None
    # the 1-dot
    if not s.terminal and s.kink == (ONE,):
        ones = [m for m in range(i, j + 1) if s.h(m) == ONE]
        if not ones:
            return None
        dots.append((i, ones[-1], ONE))
    # 0-dots: East rays top-down, each meets the leftmost open South ray it crosses
    south = [m for m in range(1, n + 1) if s.h(m) == ZERO]
    east = []
    if not s.terminal and s.kink == ZW:
        east.append((i, j + 1))
    east.extend((r, r) for r in range(max(i, 0) + 1, n + 1))
    open_cols = list(south)
    for r, c0 in east:
        for c in open_cols:
            if c >= c0 and s.row_of(c) < r:
                dots.append((r, c, ZERO))
                open_cols.remove(c)
                break
    if open_cols:
        return None
    dots.sort()
    return dots


def viable(s: Slice) -> bool:
    if not valid_word(s.kink) and not s.terminal:
        return False
    if any(len(w) != 1 for w in s.vert):
        return False
    return _slice_dots(s) is not None


def slice_dots(s: Slice) -> list:
    dots = _slice_dots(s)
    if dots is None:
        raise ValueError("slice is not viable")
    return dots


def slice_permutation(s: Slice) -> PartialPermutation:
    """g(s), the partial permutation of the dots of s."""
    return PartialPermutation.from_dots(s.n, [(r, c) for r, c, _ in slice_dots(s)])


def fusor_candidates(s: Slice) -> tuple:
    """The list C of labels available to a fusor at a 0/0 kink, SW to NE."""
    i, j = s.i, s.j
    dots = [(r, c, x) for r, c, x in slice_dots(s) if is_letter(x) and r < i and i <= c < j]
    minimal = [
        (r, c, x) for r, c, x in dots
        if not any(r < r2 and c < c2 for r2, c2, _ in dots)
    ]
    minimal.sort(key=lambda d: d[1])
    C = [x for _, _, x in minimal]
    west = [s.h(m) for m in range(i, j) if s.h(m) != ZERO]
    if west and west[-1] == ONE:
        C.append(ONE)
    return tuple(C)


def admitted_tiles(s: Slice, mode: Mode) -> list:
    """Tiles that may be placed at the kink, each with the resulting slice."""
    if s.terminal:
        raise ValueError("terminal slice has no kink")
    S, E = s.h(s.j), s.kink
    if not (S == ZERO and E == ZW):
        if E == (S,):
            cands = [Tile(S, E, ZERO, ZW)]
        elif len(E) > 1 and E[-1] == S:
            cands = [Tile(S, E, E[-2], E[:-1])]
        else:
            try:
                cands = [Tile(S, E, S, E)]
            except ValueError:
                cands = []
    else:
        cands = [Tile(ZERO, ZW, ZERO, ZW)]
        C = fusor_candidates(s)
        for size in range(1, len(C) + 1):
            for idx in combinations(range(len(C)), size):
                word = tuple(C[t] for t in idx)
                cands.append(Tile(ZERO, ZW, word[-1], word))
        cands.sort(key=_branch_key(C))
    out = []
    for t in cands:
        if not allowed_in(t, mode):
            continue
        nxt = advance(s, t)
        if nxt is None or not viable(nxt):
            continue
        if nxt.terminal and any(x not in (ZERO, ONE) for x in nxt.horiz):
            continue
        out.append((t, nxt))
    return out


def _branch_key(C):
    def key(t: Tile):
        if t.kind is Kind.EQUIVARIANT:
            return (0, ())
        return (1, tuple(C.index(x) for x in t.west))
    return key


# ---------------------------------------------------------------- dreams


@dataclass(frozen=True)
class PipeDream:
    n: int
    tiles: tuple  # ((i, j), Tile) in placement order

    @cached_property
    def grid(self) -> dict:
        return dict(self.tiles)

    def tile(self, i: int, j: int) -> Tile:
        return self.grid[(i, j)]

    @cached_property
    def key(self) -> tuple:
        return tuple(sorted(self.tiles))

    def __eq__(self, other):
        return isinstance(other, PipeDream) and self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    @property
    def north(self) -> tuple:
        return tuple(self.tile(1, m).north for m in range(1, self.n + 1))

    @property
    def south(self) -> tuple:
        return tuple(self.tile(m, m).south for m in range(1, self.n + 1))

    @property
    def east(self) -> tuple:
        return tuple(self.tile(m, self.n).east for m in range(1, self.n + 1))

    @cached_property
    def f(self) -> PartialPermutation:
        cols = {x: b for b, x in enumerate(self.south, start=1) if is_letter(x)}
        rows = {w[0]: a for a, w in enumerate(self.east, start=1) if is_letter(w[0])}
        return PartialPermutation.from_dots(self.n, [(rows[x], cols[x]) for x in cols])

    @property
    def k(self) -> int:
        return self.f.k

    @property
    def lam(self) -> Partition:
        return lambda_of(self)

    @property
    def fusing(self) -> int:
        return sum(t.fused_count for _, t in self.tiles)

    @property
    def equivariant_positions(self) -> tuple:
        return tuple(sorted(p for p, t in self.tiles if t.kind is Kind.EQUIVARIANT))

    def to_json(self) -> dict:
        return {"n": self.n, "tiles": [
            {"i": i, "j": j, **t.to_json()} for (i, j), t in sorted(self.tiles)]}

    @classmethod
    def from_json(cls, data: dict) -> "PipeDream":
        tiles = []
        for d in data["tiles"]:
            t = Tile(d["south"], tuple(d["east"]), d["north"], tuple(d["west"]))
            tiles.append(((d["i"], d["j"]), t))
        n = data["n"]
        order = {p: q for q, p in enumerate(vakil_order(n))}
        return cls(n, tuple(sorted(tiles, key=lambda pt: order[pt[0]])))


def vakil_order(n: int) -> list:
    return [(i, j) for i in range(n, 0, -1) for j in range(n, i - 1, -1)]


def lambda_of(P: PipeDream) -> Partition:
    north = P.north
    ones = [m for m, x in enumerate(north) if x == ONE]
    return normalize_partition(sum(1 for x in north[m + 1:] if x == ZERO) for m in ones)


def enumerate_dreams(f: PartialPermutation, mode: Mode | str) -> list:
    """All pipe dreams of f admissible in mode, in canonical order."""
    mode = Mode(mode)
    out = []

    def rec(s, placed):
        if s.terminal:
            out.append(PipeDream(s.n, tuple(placed)))
            return
        for tile, nxt in admitted_tiles(s, mode):
            placed.append(((s.i, s.j), tile))
            rec(nxt, placed)
            placed.pop()

    rec(initial_slice(f), [])
    return out


def walk_slices(f: PartialPermutation, mode: Mode | str):
    """Yield every slice met by the enumeration together with its admissions."""
    mode = Mode(mode)
    stack = [initial_slice(f)]
    while stack:
        s = stack.pop()
        if s.terminal:
            continue
        adm = admitted_tiles(s, mode)
        yield s, adm
        stack.extend(nxt for _, nxt in reversed(adm))


# ---------------------------------------------------------------- pipes


def hnode(i: int, j: int) -> tuple:
    """The horizontal edge South of (i, j)."""
    return ("h", i, j)


def vnode(i: int, j: int) -> tuple:
    """The vertical edge East of (i, j)."""
    return ("v", i, j)


def pipe_components(P: PipeDream):
    """Union-find over edges, joining edges on the same visible pipe."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for (i, j), t in P.tiles:
        S, N, E, W = hnode(i, j), hnode(i - 1, j), vnode(i, j), vnode(i, j - 1)
        if t.kind is Kind.CROSSING:
            union(S, N)
            union(W, E)
        else:
            # every other tile is a pair of elbows, South-East and West-North
            union(S, E)
            union(N, W)
    return find


def pipe_crossings(P: PipeDream, count_hidden: bool = False):
    """Crossing counts between pipes, keyed by frozenset of pipe ids.

    Lettered pipes are identified by their letter; 0- and 1-pipes by the
    connected component they trace out. Letters hidden inside a word (not
    its last entry) count only when count_hidden is set.
    """
    find = pipe_components(P)

    def pid(node, lab):
        return lab if is_letter(lab) else (lab, find(node))

    counts: dict = {}
    for (i, j), t in P.tiles:
        if t.kind is not Kind.CROSSING:
            continue
        a = pid(hnode(i, j), t.south)
        verticals = t.east if count_hidden else t.east[-1:]
        for x in verticals:
            b = x if is_letter(x) else pid(vnode(i, j), x)
            key = frozenset((a, b))
            counts[key] = counts.get(key, 0) + 1
    return counts, find


def word_pipe_sets(P: PipeDream, find) -> list:
    """Pipe ids sharing each multi-letter word edge."""
    out = []
    for (i, j), t in P.tiles:
        if len(t.east) > 1:
            out.append([x if is_letter(x) else (x, find(vnode(i, j))) for x in t.east])
    return out


def check_nonlocal(P: PipeDream, count_hidden: bool = False) -> Optional[str]:
    counts, find = pipe_crossings(P, count_hidden)
    for key, c in counts.items():
        a, b = tuple(key) if len(key) == 2 else (next(iter(key)),) * 2
        if len(key) == 1:
            return f"pipe {a} crosses itself"
        if _label(a) == _label(b):
            return f"pipes {a} and {b} share a label and cross"
        if _label(a) != ZERO and _label(b) != ZERO and c > 1:
            return f"pipes {a} and {b} cross {c} times"
    for ids in word_pipe_sets(P, find):
        for x, y in combinations(ids, 2):
            if counts.get(frozenset((x, y)), 0) != 1:
                return f"pipes {x} and {y} share a word but do not cross once"
    return None


def _label(pid) -> str:
    return pid if isinstance(pid, str) else pid[0]


def all_words(alphabet: list) -> list:
    """Every valid non-zero word over the alphabet, shortest first."""
    from itertools import permutations
    letters = [x for x in alphabet if x != ONE]
    out = []
    for size in range(1, len(letters) + 2):
        for body in permutations(letters, size):
            out.append(tuple(body))
        if ONE in alphabet and size - 1 <= len(letters):
            for body in permutations(letters, size - 1):
                out.append(tuple(body) + (ONE,))
    return [w for w in dict.fromkeys(out) if w]


def local_tiles(S: str, E: tuple, words: list) -> list:
    """Every tile with the given South and East labels, over a finite word set."""
    out = []
    if S == ZERO and E == ZW:
        out.append(Tile(ZERO, ZW, ZERO, ZW))
        out.extend(Tile(ZERO, ZW, w[-1], w) for w in words)
        return out
    norths = {ZERO, ONE, S} | set(E)
    for N in sorted(norths):
        for W in [ZW, E, E[:-1]] if len(E) > 1 else [ZW, E]:
            if classify(S, E, N, W) is not None:
                out.append(Tile(S, E, N, W))
    return list(dict.fromkeys(out))


def brute_force_enumerate(f: PartialPermutation, mode: Mode | str,
                          west_rule: bool = True, count_hidden: bool = False) -> list:
    """Exhaustive tiling search with local and nonlocal checks only.

    Tiles are chosen from the full local catalogue at each box, with no use
    of slices or dots. When west_rule is off, the West edges of diagonal
    tiles may carry any word.
    """
    if f.n > 5:
        raise ValueError("brute force is limited to n <= 5")
    mode = Mode(mode)
    init = initial_slice(f)
    alphabet = [letter(m) for m in range(1, f.rank + 1)] + [ONE]
    words = all_words(alphabet)
    n = f.n
    order = vakil_order(n)
    out = []

    def rec(pos, south, east, placed):
        # south[j]: label on the open edge in column j; east: current East word
        if pos == len(order):
            P = PipeDream(n, tuple(placed))
            if any(x not in (ZERO, ONE) for x in P.north):
                return
            if check_nonlocal(P, count_hidden) is None:
                out.append(P)
            return
        i, j = order[pos]
        S = south[j - 1]
        E = east if j < n else vert[i - 1]
        for t in local_tiles(S, E, words):
            if not allowed_in(t, mode):
                continue
            if j == i and west_rule and t.west != ZW:
                continue
            new_south = list(south)
            new_south[j - 1] = t.north
            placed.append(((i, j), t))
            rec(pos + 1, new_south, t.west, placed)
            placed.pop()

    vert = list(init.vert) + [init.kink]
    rec(0, list(init.horiz), vert[-1], [])
    return out
