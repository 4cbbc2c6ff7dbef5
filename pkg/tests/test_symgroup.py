import pytest
from hypothesis import given
import hypothesis.strategies as st

from heckez.symgroup import (
    all_perms, compose, cycle_type, from_word, identity, inverse, length,
    longest, min_coset_reps, parse_permutation, reduced_word, w_min,
)

perms4 = st.sampled_from(all_perms(4))


def test_reduced_word_of_longest():
    assert reduced_word((3, 2, 1)) == [1, 2, 1]
    assert length(longest(4)) == 6


@given(perms4)
def test_reduced_word_round_trip(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    assert from_word(word, 4) == w


@given(perms4, perms4)
def test_composition_and_inverse(u, w):
    assert compose(u, inverse(u)) == identity(4)
    assert cycle_type(compose(u, compose(w, inverse(u)))) == cycle_type(w)


@pytest.mark.parametrize("lam", [(3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)])
def test_w_min_is_minimal_in_its_class(lam):
    n = sum(lam)
    w = w_min(lam)
    assert cycle_type(w) == lam
    assert length(w) == n - len(lam)
    assert length(w) == min(length(u) for u in all_perms(n) if cycle_type(u) == lam)


def test_min_coset_reps():
    reps = min_coset_reps((2, 1))
    assert len(reps) == 3
    assert reps[0] == identity(3)
    assert len(min_coset_reps((2, 2))) == 6


def test_parse_permutation():
    assert parse_permutation("3 1 2 4") == (3, 1, 2, 4)
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")
    with pytest.raises(ValueError):
        parse_permutation("x")
