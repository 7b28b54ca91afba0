"""The running example's K_T class, recomputed by fixed-point localization."""
import pytest

sp = pytest.importorskip("sympy")

from localization import E, expand_by_localization  # noqa: E402

from ipdreams.classes import expand  # noqa: E402
from ipdreams.dreams import Mode  # noqa: E402


def _to_sympy(w, invert):
    total = 0
    for mono, c in w.terms.items():
        term = sp.Integer(c)
        for i, e in mono:
            term *= E[i - 1] ** (-e if invert else e)
        total += term
    return sp.expand(total)


def test_kt_class_matches_localization(two_dots):
    oracle = expand_by_localization(two_dots.dots, two_dots.k, two_dots.n)
    ours = expand(two_dots, Mode.KT).terms
    assert set(oracle) == set(ours)
    # the oracle grades chart coordinates by E_c / E_b, dual to exp(y_i - y_j)
    for lam, w in ours.items():
        assert sp.simplify(_to_sympy(w, invert=True) - oracle[lam]) == 0


def test_localization_non_equivariant_limit(two_dots):
    oracle = expand_by_localization(two_dots.dots, two_dots.k, two_dots.n)
    at_one = {lam: v.subs({e: 1 for e in E}) for lam, v in oracle.items()}
    assert {lam: c for lam, c in at_one.items() if c} == {(2,): 1, (1, 1): 1, (1,): -1}


@pytest.mark.parametrize("dots", [[(1, 3)], [(2, 3)], [(1, 2), (2, 4)], [(1, 4), (2, 3)]])
def test_other_classes_match_localization(dots):
    from ipdreams.core import PartialPermutation
    f = PartialPermutation.from_dots(4, dots)
    oracle = expand_by_localization(f.dots, f.k, f.n)
    ours = expand(f, Mode.KT).terms
    assert set(oracle) == set(ours)
    for lam, w in ours.items():
        assert sp.simplify(_to_sympy(w, invert=True) - oracle[lam]) == 0
