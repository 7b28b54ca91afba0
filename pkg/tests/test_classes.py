import pytest
from hypothesis import given, strategies as st

from ipdreams.classes import (
    ExpLaurent,
    YPolynomial,
    check_graham_positive,
    e_diff,
    expand,
    lowest_degree_part,
    specialize_KT_to_HT,
    specialize_KT_to_K,
    wt_H,
    wt_K,
    y,
)
from ipdreams.core import BoundedAffinePermutation, PartialPermutation, extend_to_juggling
from ipdreams.dreams import Mode, enumerate_dreams

from conftest import partial_perms


@st.composite
def ypolys(draw):
    p = YPolynomial()
    for _ in range(draw(st.integers(0, 3))):
        c = draw(st.integers(-3, 3))
        exps = {i: draw(st.integers(0, 2)) for i in draw(st.sets(st.integers(1, 4), max_size=2))}
        p = p + YPolynomial.monomial(exps, c) if c else p
    return p


@st.composite
def laurents(draw):
    p = ExpLaurent()
    for _ in range(draw(st.integers(0, 3))):
        c = draw(st.integers(-3, 3))
        exps = {i: draw(st.integers(-2, 2)) for i in draw(st.sets(st.integers(1, 4), max_size=2))}
        p = p + ExpLaurent.monomial(exps, c) if c else p
    return p


@given(ypolys(), ypolys(), ypolys())
def test_polynomial_ring_laws(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0 and a * 1 == a


@given(laurents(), laurents())
def test_laurent_ring_laws(a, b):
    assert a * b == b * a
    assert (a + b).at_one() == a.at_one() + b.at_one()
    assert (a * b).at_one() == a.at_one() * b.at_one()


def test_negative_exponents():
    with pytest.raises(ValueError):
        YPolynomial.monomial({1: -1})
    assert e_diff(1, 2) * e_diff(2, 1) == 1
    assert e_diff(1, 2) ** -1 == e_diff(2, 1)
    assert e_diff(3, 3) == 1


def test_printing():
    assert str(y(1) - y(4)) == "y1 - y4"
    assert str(YPolynomial()) == "0"
    assert str(1 - e_diff(2, 4)) == "-E2*E4^-1 + 1"


@pytest.mark.parametrize("i,j", [(1, 2), (2, 5), (1, 4)])
def test_lowest_degree_of_root(i, j):
    assert lowest_degree_part(1 - e_diff(i, j), 1) == y(i) - y(j)
    assert lowest_degree_part(e_diff(i, j), 0) == 1
    w = (1 - e_diff(1, 2)) * (1 - e_diff(i, j))
    assert lowest_degree_part(w, 2) == (y(1) - y(2)) * (y(i) - y(j))


def test_running_example_expansions(two_dots):
    assert expand(two_dots, Mode.H).terms == {(2,): 1, (1, 1): 1}
    assert expand(two_dots, Mode.HT).terms == {
        (2,): YPolynomial.const(1), (1, 1): YPolynomial.const(1), (2, 1): y(1) - y(4)}
    assert expand(two_dots, Mode.K).terms == {(2,): 1, (1, 1): 1, (1,): -1}


def test_running_example_kt_class(two_dots):
    # frozen from the localization oracle in test_localization.py
    e14 = e_diff(1, 4)
    assert expand(two_dots, Mode.KT).terms == {
        (2,): e14, (1, 1): e14, (1,): -e14, (2, 1): 1 - e14}


def test_weights_of_running_example(two_dots):
    ws = sorted(str(wt_H(P)) for P in enumerate_dreams(two_dots, Mode.HT))
    assert ws == ["1", "1", "y1 - y2", "y2 - y4"]
    fused = [P for P in enumerate_dreams(two_dots, Mode.KT) if P.fusing]
    assert len(fused) == 2
    with pytest.raises(ValueError):
        wt_H(fused[0])
    assert all(wt_K(P).at_one() in (0, 1) for P in fused)


def test_expansion_json(two_dots):
    js = expand(two_dots, Mode.K).to_json()
    assert js == {"mode": "K", "k": 2, "n": 4, "terms": [
        {"partition": [2], "coeff": 1},
        {"partition": [1, 1], "coeff": 1},
        {"partition": [1], "coeff": -1}]}
    js = expand(two_dots, Mode.HT).to_json()
    assert js["terms"][0]["partition"] == [2, 1]


def test_expand_accepts_interval_patterns(two_dots):
    J = extend_to_juggling(two_dots)
    assert expand(J, Mode.K).same_terms(expand(two_dots, Mode.K))
    with pytest.raises(ValueError):
        expand(BoundedAffinePermutation(3, (3, 5, 4)), Mode.H)


def test_specializations_need_kt(two_dots):
    with pytest.raises(ValueError):
        specialize_KT_to_K(expand(two_dots, Mode.K))
    with pytest.raises(ValueError):
        check_graham_positive(expand(two_dots, Mode.K))


@pytest.mark.parametrize("f", [PartialPermutation.empty(3), PartialPermutation.identity(3)])
def test_degenerate_ranks_give_unit_class(f):
    # rank 0 is the whole Grassmannian, rank n the point Gr_0(n)
    for mode in Mode:
        e = expand(f, mode)
        assert e.terms == {(): 1} or e.terms == {(): YPolynomial.const(1)} \
            or e.terms == {(): ExpLaurent.const(1)}
    assert expand(f, Mode.H).k == f.k


@given(partial_perms(max_n=5))
def test_specializations_commute(f):
    kt = expand(f, Mode.KT)
    assert specialize_KT_to_K(kt).same_terms(expand(f, Mode.K))
    ht = expand(f, Mode.HT)
    assert specialize_KT_to_HT(kt).same_terms(ht)
    assert check_graham_positive(ht)


@given(partial_perms(max_n=5))
def test_nonequivariant_parts_agree(f):
    # the H class is the top-degree part of the K class and the y = 0 part of HT
    h = expand(f, Mode.H).terms
    k = expand(f, Mode.K).terms
    d = max((sum(lam) for lam in k), default=0)
    assert {lam: c for lam, c in k.items() if sum(lam) == d} == h if k else not h
    ht = expand(f, Mode.HT).terms
    assert {lam: c.terms.get((), 0) for lam, c in ht.items() if c.terms.get((), 0)} == h
