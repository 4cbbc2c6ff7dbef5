"""
The symmetric group S_n, with permutations as tuples in one-line notation
`(w(1), ..., w(n))` on the letters 1..n.

Composition convention: permutations compose as functions, so
`(u*w)(i) = u(w(i))`; see `compose`. Consequently right multiplication by the
simple transposition `s_i = (i, i+1)` swaps the entries in *positions* i and
i+1, and left multiplication by `s_i` swaps the *values* i and i+1. The Hecke
algebra in `heckez.hecke` uses the same convention.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from .combinatorics import Composition, Partition

__all__ = [
    "Permutation", "identity", "compose", "inverse", "simple",
    "right_mul_simple", "left_mul_simple", "length", "reduced_word",
    "from_word", "cycle_type", "w_min", "longest_in_young", "longest",
    "min_coset_reps", "all_perms", "young_subgroup", "is_permutation",
    "parse_permutation", "render_permutation", "shift_into",
]

Permutation = tuple[int, ...]


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """The product `u*w`, i.e. first `w` then `u`."""
    return tuple(u[x - 1] for x in w)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        out[x - 1] = i
    return tuple(out)


def simple(i: int, n: int) -> Permutation:
    """The transposition `s_i = (i, i+1)` in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"no generator s_{i} in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_mul_simple(w: Permutation, i: int) -> Permutation:
    """`w * s_i`: swap positions i and i+1."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def left_mul_simple(i: int, w: Permutation) -> Permutation:
    """`s_i * w`: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def length(w: Permutation) -> int:
    """Coxeter length, the number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w: Permutation) -> list[int]:
    """
    A reduced word `[i_1, ..., i_r]` with `w = s_{i_1} ... s_{i_r}`.

    Strips the smallest right descent repeatedly, so the word is built from
    the right.

    >>> reduced_word((3, 2, 1))
    [1, 2, 1]
    """
    w = list(w)
    word = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return word


def from_word(word, n: int) -> Permutation:
    w = identity(n)
    for i in word:
        w = right_mul_simple(w, i)
    return w


def cycle_type(w: Permutation) -> Partition:
    seen = [False] * len(w)
    lengths = []
    for start in range(len(w)):
        if seen[start]:
            continue
        k, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = w[j] - 1
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def w_min(lam: Partition) -> Permutation:
    """The block-cycle `(1,...,lam_1)(lam_1+1,...,lam_1+lam_2)...`, a minimal
    length element of cycle type `lam`."""
    out = []
    start = 1
    for part in lam:
        block = list(range(start, start + part))
        out.extend(block[1:] + block[:1])
        start += part
    return tuple(out)


def longest_in_young(alpha: Composition) -> Permutation:
    """The longest element of the Young subgroup S_alpha: reverse each block."""
    out = []
    start = 1
    for part in alpha:
        out.extend(range(start + part - 1, start - 1, -1))
        start += part
    return tuple(out)


def longest(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def _blocks(alpha: Composition) -> list[range]:
    out, start = [], 0
    for part in alpha:
        out.append(range(start, start + part))
        start += part
    return out


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic one-line order."""
    return tuple(permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def min_coset_reps(alpha: Composition) -> tuple[Permutation, ...]:
    """
    The minimal length representatives D_alpha of the left cosets
    `w S_alpha`: permutations increasing inside every block of positions.

    Returned sorted by length, then lexicographically, so every element is
    preceded by `s_i * w` whenever that is shorter.
    """
    alpha = tuple(alpha)
    n = sum(alpha)
    bounds = [(b.start, b.stop) for b in _blocks(alpha)]
    reps = [w for w in all_perms(n)
            if all(w[j] < w[j + 1] for lo, hi in bounds for j in range(lo, hi - 1))]
    expected = factorial(n) // prod(factorial(a) for a in alpha)
    assert len(reps) == expected
    return tuple(sorted(reps, key=lambda w: (length(w), w)))


@lru_cache(maxsize=None)
def young_subgroup(alpha: Composition) -> frozenset:
    """The Young subgroup S_alpha as a set of permutations of 1..n."""
    n = sum(alpha)
    blocks = _blocks(alpha)
    out = []
    for w in all_perms(n):
        if all(w[j] - 1 in b for b in blocks for j in b):
            out.append(w)
    return frozenset(out)


def shift_into(w: Permutation, offset: int, n: int) -> Permutation:
    """Embed `w` in S_k as a permutation of the letters offset+1..offset+k
    inside S_n, fixing everything else."""
    out = list(range(1, n + 1))
    for i, x in enumerate(w):
        out[offset + i] = offset + x
    return tuple(out)


def parse_permutation(text: str) -> Permutation:
    """Space- or comma-separated one-line notation, e.g. `"3 1 2 4"`."""
    try:
        w = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    if not is_permutation(w):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(w)}")
    return w


def render_permutation(w: Permutation) -> str:
    return " ".join(map(str, w))
