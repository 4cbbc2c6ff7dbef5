"""
Independent cross-check routes, deliberately not sharing code paths with the
quantities they check.
"""

from __future__ import annotations

from functools import lru_cache

from .combinatorics import Partition, standard_tableaux_count
from .hecke import HeckeElement, basis, he_mul
from .ratfun import ZERO
from .symgroup import all_perms


@lru_cache(maxsize=None)
def murnaghan_nakayama(lam: Partition, mu: Partition) -> int:
    """The S_n character value chi^lam on cycle type mu, by removing rim hooks
    of length mu[0] on the abacus of beta-numbers."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + (ell - 1 - i) for i in range(ell)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        sign = (-1) ** sum(1 for c in beads if target < c < b)
        new = sorted((beads - {b}) | {target}, reverse=True)
        k = len(new)
        shape = tuple(x for x in (new[i] - (k - 1 - i) for i in range(k)) if x > 0)
        total += sign * murnaghan_nakayama(shape, rest)
    return total


def regular_trace_character(e: HeckeElement, degree: int, ws) -> dict:
    """`chi(T_w)` for each w in `ws`, for the irreducible cut out by the
    central idempotent `e`.

    Left multiplication by T_w on the two-sided ideal H e is `degree` copies of
    the irreducible module, so the trace of `x -> T_w x e` over the basis
    {T_u} of H_n equals `degree * chi(T_w)`.
    """
    n = e.n
    right = {u: he_mul(basis(u), e) for u in all_perms(n)}
    out = {}
    for w in ws:
        tw = basis(tuple(w))
        acc = ZERO
        for u, x in right.items():
            acc = acc + he_mul(tw, x).coeff(u)
        out[tuple(w)] = acc / degree
    return out


def degree_of(lam: Partition) -> int:
    return standard_tableaux_count(tuple(lam))
