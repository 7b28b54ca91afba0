import time
from collections import Counter
from itertools import product

import pytest
from hypothesis import given

from ipdreams.core import PartialPermutation, all_partial_permutations
from ipdreams.dreams import (
    ZW,
    Kind,
    Mode,
    PipeDream,
    Tile,
    admitted_tiles,
    allowed_in,
    brute_force_enumerate,
    check_nonlocal,
    classify,
    enumerate_dreams,
    initial_slice,
    letter,
    slice_permutation,
    valid_word,
    walk_slices,
)

from conftest import partial_perms


def test_letters():
    assert [letter(m) for m in (1, 2, 26, 27)] == ["A", "B", "Z", "a"]


def test_valid_words():
    assert valid_word(("0",)) and valid_word(("A", "B")) and valid_word(("A", "1"))
    assert not valid_word(("1", "A"))  # 1 only at the end
    assert not valid_word(("A", "A"))
    assert not valid_word(("A", "0"))
    assert not valid_word(())


def test_single_letter_tile_census():
    # with labels 0, 1, A and one-letter words: 2 dot tiles, 2 fusors,
    # 5 crossings and the equivariant tile
    census = Counter()
    for S, E, N, W in product("01A", repeat=4):
        kind = classify(S, (E,), N, (W,))
        if kind:
            census[kind] += 1
    assert census == {Kind.DOT: 2, Kind.FUSOR: 2, Kind.CROSSING: 5, Kind.EQUIVARIANT: 1}


@pytest.mark.parametrize("tile,kind", [
    (("0", ("0",), "0", ("0",)), Kind.EQUIVARIANT),
    (("0", ("0",), "A", ("A",)), Kind.FUSOR),
    (("0", ("0",), "B", ("A", "B")), Kind.FUSOR),
    (("A", ("A",), "0", ("0",)), Kind.DOT),
    (("1", ("1",), "0", ("0",)), Kind.DOT),
    (("A", ("B",), "A", ("B",)), Kind.CROSSING),
    (("B", ("A", "B"), "A", ("A",)), Kind.DISPLACER),
])
def test_classify(tile, kind):
    assert classify(*tile) is kind
    assert Tile(*tile).kind is kind


@pytest.mark.parametrize("tile", [
    ("A", ("1",), "A", ("1",)),  # a letter may not cross a 1 going East
    ("A", ("A",), "A", ("A",)),
    ("0", ("0",), "1", ("0",)),
    ("B", ("A", "B"), "B", ("A",)),
])
def test_non_tiles_rejected(tile):
    assert classify(*tile) is None
    with pytest.raises(ValueError):
        Tile(*tile)


def test_fused_tiles_need_k_theory():
    fused = Tile("0", ZW, "B", ("A", "B"))
    assert fused.fused_count == 1
    assert not allowed_in(fused, Mode.HT) and allowed_in(fused, Mode.K)
    eq = Tile("0", ZW, "0", ZW)
    assert allowed_in(eq, Mode.KT) and not allowed_in(eq, Mode.K)


def test_running_example_counts(two_dots):
    counts = {m: len(enumerate_dreams(two_dots, m)) for m in Mode}
    assert counts == {Mode.H: 2, Mode.HT: 4, Mode.K: 3, Mode.KT: 6}


def test_running_example_lambdas(two_dots):
    lams = sorted(P.lam for P in enumerate_dreams(two_dots, Mode.HT))
    assert lams == [(1, 1), (2,), (2, 1), (2, 1)]


def test_initial_slice(two_dots):
    s = initial_slice(two_dots)
    assert (s.i, s.j) == (4, 4)
    assert s.horiz == ("1", "A", "1", "B")
    assert s.vert == (("A",), ("0",), ("B",)) and s.kink == ZW
    assert slice_permutation(s) == two_dots


def test_enumeration_is_deterministic(two_dots):
    a = enumerate_dreams(two_dots, Mode.KT)
    b = enumerate_dreams(two_dots, "KT")
    assert [P.key for P in a] == [P.key for P in b]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dreams_have_boundary_of_f(n):
    for f in all_partial_permutations(n):
        for P in enumerate_dreams(f, Mode.KT):
            assert P.f == f
            assert all(len(w) == 1 for w in P.east)
            assert all(x in "01" for x in P.north)
            assert check_nonlocal(P) is None


def test_slices_keep_the_class_of_f():
    for f in all_partial_permutations(4):
        for s, adm in walk_slices(f, Mode.KT):
            assert slice_permutation(s).rank == f.rank
            for tile, nxt in adm:
                assert allowed_in(tile, Mode.KT)


def test_admitted_tiles_branch_equivariant_first(two_dots):
    for s, adm in walk_slices(two_dots, Mode.KT):
        kinds = [t.kind for t, _ in adm]
        if Kind.EQUIVARIANT in kinds:
            assert kinds[0] is Kind.EQUIVARIANT


def test_json_round_trip(two_dots):
    for P in enumerate_dreams(two_dots, Mode.KT):
        Q = PipeDream.from_json(P.to_json())
        assert Q == P and Q.tiles == P.tiles


def test_brute_force_refuses_large_n():
    with pytest.raises(ValueError):
        brute_force_enumerate(PartialPermutation.empty(6), Mode.H)


def test_bad_mode():
    with pytest.raises(ValueError):
        enumerate_dreams(PartialPermutation.empty(2), "X")


@given(partial_perms(max_n=5))
def test_modes_nest(f):
    h = set(enumerate_dreams(f, Mode.H))
    assert h <= set(enumerate_dreams(f, Mode.HT))
    assert h <= set(enumerate_dreams(f, Mode.K))
    kt = set(enumerate_dreams(f, Mode.KT))
    assert set(enumerate_dreams(f, Mode.HT)) | set(enumerate_dreams(f, Mode.K)) <= kt


@given(partial_perms(max_n=5))
def test_no_duplicates(f):
    for mode in Mode:
        dreams = enumerate_dreams(f, mode)
        assert len(set(dreams)) == len(dreams)


def test_n6_enumeration_is_quick():
    f = PartialPermutation.from_dots(6, [(1, 3), (2, 5), (4, 6)])
    t = time.perf_counter()
    dreams = enumerate_dreams(f, Mode.KT)
    assert dreams and time.perf_counter() - t < 10
