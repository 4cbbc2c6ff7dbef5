import pytest

from heckez.combinatorics import (
    compositions_of, is_partition, parse_partition, partitions_of,
    render_partition, standard_tableaux_count, z_factor, zero_one_matrix_count,
)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11), (8, 22)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count
    assert all(is_partition(p) and sum(p) == n for p in partitions_of(n))


def test_partition_order_is_decreasing_lex():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_compositions(n):
    comps = compositions_of(n)
    assert len(comps) == 2 ** (n - 1)
    assert len(set(comps)) == len(comps)


def test_z_factor():
    assert z_factor((2, 1, 1)) == 2 * 2
    assert z_factor((3,)) == 3
    assert z_factor(()) == 1


def test_zero_one_matrices():
    # b_{(1,1),(2)}: row sums 1,1, column sum 2
    assert zero_one_matrix_count((1, 1), (2,)) == 1
    assert zero_one_matrix_count((2,), (1, 1)) == 1
    assert zero_one_matrix_count((2,), (2,)) == 0
    assert zero_one_matrix_count((1, 1), (1, 1)) == 2
    with pytest.raises(ValueError):
        zero_one_matrix_count((2,), (1,))


@pytest.mark.parametrize("lam, count", [((3,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 2, 1), 16), ((), 1)])
def test_standard_tableaux(lam, count):
    assert standard_tableaux_count(lam) == count


def test_render_parse():
    for lam in partitions_of(5) + [()]:
        assert parse_partition(render_partition(lam)) == lam
    assert parse_partition("(2, 1)") == (2, 1)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a")
