"""Tests for the center: class polynomials, Geck-Rouquier basis, norms, o."""
import pytest

from heckez.center import (
    CentralElement, circ, class_polynomials, decompose_central,
    gr_basis_element, gr_element, norm_direct, norm_F, norm_one, norm_tsq,
    relative_norm,
)
from heckez.combinatorics import partitions_of
from heckez.hecke import HeckeElement, basis, is_central, t_tilde_sq, unit
from heckez.ratfun import ONE, V, ZERO


def test_class_polynomial_row_of_longest_element():
    row = class_polynomials(3).row((3, 2, 1))
    assert row == {(3,): V - 1, (2, 1): V, (1, 1, 1): ZERO}


@pytest.mark.parametrize("n", range(1, 6))
def test_class_polynomials_are_polynomials(n):
    for row in class_polynomials(n).table.values():
        assert all(c.is_polynomial() for c in row.values())


def test_gr_element_small():
    assert gr_element((2,)) == HeckeElement(2, {(2, 1): ONE / V})
    assert gr_element((1, 1)) == unit(2)


@pytest.mark.parametrize("n", range(1, 5))
def test_gr_elements_central_and_decomposable(n):
    for lam in partitions_of(n):
        g = gr_element(lam)
        assert is_central(g)
        assert decompose_central(g) == gr_basis_element(lam)


def test_decompose_rejects_non_central():
    with pytest.raises(ValueError):
        decompose_central(basis((2, 1, 3)))


def test_relative_norms_n2():
    assert decompose_central(relative_norm((1, 1), unit(2))) == \
        CentralElement(2, {(2,): V - 1, (1, 1): 2})
    assert decompose_central(relative_norm((2,), t_tilde_sq((2, 1)))) == \
        CentralElement(2, {(2,): V - 1, (1, 1): ONE})


def test_relative_norm_requires_young_support():
    with pytest.raises(ValueError):
        relative_norm((1, 1), basis((2, 1)))


def test_circ_small():
    f1 = gr_basis_element((1,))
    assert circ(f1, f1) == norm_one((1, 1))
    f2 = gr_basis_element((2,))
    assert circ(f2, f1) == CentralElement(3, {(3,): V - 1, (2, 1): ONE})
    assert circ(f2, f1) == circ(f1, f2)


def test_circ_with_degree_zero_unit():
    z = gr_basis_element((2, 1))
    assert circ(CentralElement(0, {(): ONE}), z) == z


@pytest.mark.parametrize("n", range(1, 5))
def test_norm_families_match_direct(n):
    for lam in partitions_of(n):
        assert norm_one(lam) == norm_direct("one", lam)
        assert norm_tsq(lam) == norm_direct("tsq", lam)
        assert norm_F(lam) == norm_direct("F", lam)


def test_json_and_str():
    z = CentralElement(2, {(2,): V - 1, (1, 1): 2})
    assert CentralElement.from_json(z.to_json()) == z
    assert str(z) == "(v - 1)*f[2] + (2)*f[1,1]"
