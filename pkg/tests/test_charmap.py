"""Tests for characters, idempotents, psi and ch_v."""
from fractions import Fraction

import pytest

from heckez.center import gr_basis_element
from heckez.charmap import (
    ch_v, char_value, character_table, central_idempotent,
    classical_psi, generic_degree, induce, irreducible, poincare, psi,
    psi_inv, schur_element, star_product, theta,
)
from heckez.combinatorics import partitions_of, standard_tableaux_count
from heckez.oracles import murnaghan_nakayama
from heckez.ratfun import ONE, V
from heckez.symfunc import basis_element, sf_mul


def test_character_table_n2():
    ct = character_table(2)
    assert ct.values == [[V, ONE], [-ONE, ONE]]
    assert ct.to_csv() == 'lambda,2,"1,1"\n2,v,1\n"1,1",-1,1\n'


def test_character_table_n1_and_n0():
    assert character_table(1).values == [[ONE]]
    assert character_table(0).values == [[ONE]]


@pytest.mark.parametrize("n", range(1, 7))
def test_v1_matches_murnaghan_nakayama(n):
    at1 = character_table(n).specialize_v1()
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            assert at1[i][j] == murnaghan_nakayama(lam, mu)


def test_schur_elements_and_degrees_n2():
    assert schur_element((2,)) == V + 1
    assert schur_element((1, 1)) == (V + 1) / V
    assert generic_degree((2,)) == 1
    assert generic_degree((1, 1)) == V


@pytest.mark.parametrize("n", range(1, 6))
def test_generic_degrees(n):
    for lam in partitions_of(n):
        d = generic_degree(lam)
        assert d.is_polynomial()
        assert d.eval_at_one() == standard_tableaux_count(lam)


def test_char_value_on_identity_is_degree():
    assert char_value((2, 1), (1, 2, 3)) == 2


def test_psi_examples():
    assert psi(gr_basis_element((2,))).to("p") == basis_element("p", (2,)).scale(ONE / (V + 1))
    assert psi_inv(basis_element("p", (2,))) == gr_basis_element((2,)).scale(V + 1)


def test_idempotent_n2():
    e = central_idempotent((2,))
    assert e.coeff((1, 2)) == ONE / (V + 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_ch_v_on_irreducibles(n):
    for lam in partitions_of(n):
        chi = irreducible(lam)
        assert ch_v(chi) == basis_element("s", lam)
        assert psi(theta(chi)) == ch_v(chi)


def test_induce_matches_littlewood_richardson():
    chi = induce(irreducible((1,)), irreducible((1,)))
    assert chi == irreducible((2,)) + irreducible((1, 1))
    assert ch_v(induce(irreducible((2,)), irreducible((1,)))) == \
        sf_mul(basis_element("s", (2,)), basis_element("s", (1,)))


def test_classical_psi():
    f = classical_psi({(2,): Fraction(1)})
    assert f == basis_element("p", (2,)).scale(Fraction(1, 2))


def test_star_product_on_schur():
    s2, s11 = basis_element("s", (2,)), basis_element("s", (1, 1))
    assert star_product(s2, s2) == s2.scale(schur_element((2,)))
    assert star_product(s2, s11).is_zero()


def test_poincare():
    assert poincare(3) == (1 + V) * (1 + V + V ** 2)


def test_psi_takes_hecke_product_to_star_product():
    from heckez.center import decompose_central
    from heckez.charmap import idempotent_coords
    from heckez.hecke import he_mul
    for lam in partitions_of(3):
        for mu in partitions_of(3):
            a, b = idempotent_coords(lam), idempotent_coords(mu)
            prod = decompose_central(he_mul(a.to_hecke(), b.to_hecke()))
            assert star_product(psi(a), psi(b)) == psi(prod)
