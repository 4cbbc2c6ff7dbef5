"""Tests for symmetric functions over Q(v)."""
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from heckez.combinatorics import partitions_of, z_factor
from heckez.ratfun import ONE, V, RatFun
from heckez.symfunc import (
    BASES, SymFun, basis_element, cauchy_check, convert, d_matrix, h_bar,
    hall_inner, lr_coefficients, m_bar, plethysm_scale, sf_mul, specialize_v1,
    transition_matrix,
)


def test_small_expansions():
    e2 = basis_element("e", (2,))
    assert convert(e2, "m") == basis_element("m", (1, 1))
    h2 = basis_element("h", (2,))
    assert convert(h2, "m") == basis_element("m", (2,)) + basis_element("m", (1, 1))
    p2 = basis_element("p", (2,))
    assert convert(p2, "s") == basis_element("s", (2,)) - basis_element("s", (1, 1))


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("a, b", [("m", "e"), ("h", "p"), ("s", "m"), ("e", "s")])
def test_transition_round_trip(n, a, b):
    m = transition_matrix(a, b, n)
    assert m @ transition_matrix(b, a, n) == transition_matrix(a, a, n)
    assert m.inverse() == transition_matrix(b, a, n)


def test_m_bar_small():
    assert m_bar((2,)) == basis_element("p", (2,)).scale(ONE / (V + 1))
    assert m_bar((1,)) == basis_element("m", (1,))


def test_h_bar_at_v_equal_one():
    # hbar_mu specializes to p_mu
    for mu in partitions_of(4):
        assert specialize_v1(h_bar(mu)) == basis_element("p", mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_plethysm_inverse(n):
    for lam in partitions_of(n):
        f = basis_element("s", lam)
        assert plethysm_scale(plethysm_scale(f, "expand"), "contract") == f


def test_hall_inner_orthonormal_schur():
    parts = partitions_of(4)
    for a in parts:
        for b in parts:
            got = hall_inner(basis_element("s", a), basis_element("s", b))
            assert got == (1 if a == b else 0)
    assert hall_inner(basis_element("p", (2, 1, 1)), basis_element("p", (2, 1, 1))) == z_factor((2, 1, 1))


def test_lr_coefficients():
    assert lr_coefficients((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_coefficients((2, 1), (2, 1))[(3, 2, 1)] == 2


def test_d_matrix():
    d = d_matrix(3)
    assert d.entries[0][0] == (V - 1) ** 2
    assert d.entries[2][2] == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_cauchy(n):
    assert cauchy_check(n, n)


def test_json_round_trip():
    f = m_bar((2, 1)).to("s")
    assert SymFun.from_json(f.to_json()) == f
    assert f.to_json()["basis"] == "s"


def test_invalid():
    with pytest.raises(ValueError):
        basis_element("q", (1,))
    with pytest.raises(ValueError):
        SymFun(2, "m", {(3,): ONE})


coef = st.integers(-3, 3).map(RatFun)


@st.composite
def symfuns(draw, n=3):
    basis = draw(st.sampled_from(BASES))
    return SymFun(n, basis, {lam: draw(coef) for lam in partitions_of(n)})


@settings(max_examples=40, deadline=None)
@given(symfuns(), symfuns(), st.sampled_from(BASES))
def test_conversion_is_linear(f, g, target):
    assert (f + g).to(target) == f.to(target) + g.to(target)


@settings(max_examples=30, deadline=None)
@given(symfuns(2), symfuns(2), symfuns(1))
def test_product_commutative_associative(f, g, h):
    assert sf_mul(f, g) == sf_mul(g, f)
    assert sf_mul(sf_mul(f, h), g) == sf_mul(f, sf_mul(h, g))
