"""
Partitions, compositions and the counting functions built on them.

Partitions and compositions are plain tuples of positive ints. Partitions are
weakly decreasing; `()` is the empty partition of 0. Lists of partitions are
always in decreasing lexicographic order, which fixes the row and column order
of every matrix this package prints.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod

__all__ = [
    "Partition", "Composition",
    "is_partition", "partitions_of", "compositions_of", "z_factor",
    "zero_one_matrix_count", "union_sorted", "standard_tableaux_count",
    "render_partition", "parse_partition", "multiplicities",
]

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:]))


def _check_partition(lam) -> Partition:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam!r} is not a partition")
    return lam


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """
    All partitions of `n` in decreasing lexicographic order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def compositions_of(n: int) -> list[Composition]:
    """All compositions of `n`, in decreasing lexicographic order.

    There are `2**(n-1)` of them for `n >= 1`, and one (empty) for `n = 0`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out = []
    # each of the n-1 gaps is either a cut or not
    for cuts in product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    out.sort(reverse=True)
    return out


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map from part size `i` to its multiplicity `m_i` in `lam`."""
    return dict(Counter(lam))


def z_factor(lam: Partition) -> int:
    """`prod_i i**m_i * m_i!`, the centralizer order of a permutation of
    cycle type `lam`."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def zero_one_matrix_count(alpha: Composition, mu: Partition) -> int:
    """
    Number of 0-1 matrices with row sums `alpha` and column sums `mu`, by
    exhaustive enumeration row by row.

    Each row is an `alpha_i`-subset of the columns; the search is pruned by the
    remaining column capacity.
    """
    alpha, mu = tuple(alpha), tuple(mu)
    if sum(alpha) != sum(mu):
        raise ValueError(f"size mismatch: |{alpha}| != |{mu}|")
    ncols = len(mu)

    def rows(i: int, remaining: tuple[int, ...]) -> int:
        if i == len(alpha):
            return int(not any(remaining))
        total = 0
        for row in product((0, 1), repeat=ncols):
            if sum(row) != alpha[i]:
                continue
            if any(r > c for r, c in zip(row, remaining)):
                continue
            total += rows(i + 1, tuple(c - r for r, c in zip(row, remaining)))
        return total

    return rows(0, mu)


def union_sorted(mu: Partition, lam: Partition) -> Partition:
    """The partition whose parts are those of `mu` and `lam` together."""
    return tuple(sorted(tuple(mu) + tuple(lam), reverse=True))


@lru_cache(maxsize=None)
def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape `lam`, by removing the cell
    holding the largest entry (an outer corner) in every possible way."""
    lam = _check_partition(lam)
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, part in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < part:
            smaller = lam[:i] + (part - 1,) + lam[i + 1:]
            total += standard_tableaux_count(tuple(p for p in smaller if p))
    return total


def render_partition(lam) -> str:
    """`(2, 1, 1)` renders as `2,1,1`; the empty partition as `-`."""
    return ",".join(map(str, lam)) if lam else "-"


def parse_partition(text: str) -> Partition:
    """Inverse of `render_partition`; also accepts parentheses and spaces."""
    text = text.strip().strip("()[]").strip()
    if text in ("", "-"):
        return ()
    try:
        parts = tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return _check_partition(parts)
