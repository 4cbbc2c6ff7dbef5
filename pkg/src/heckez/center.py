"""
The center Z(H_n) and the graded algebra Z = sum_n Z(H_n).

Class polynomials
-----------------
For each `w` in S_n there are `f_{w,lam}` with

    T_w = sum_lam f_{w,lam} T_{w_lam}    modulo [H_n, H_n],

where `w_lam` is the block-cycle minimal element of cycle type `lam`. They are
computed with two rewriting rules valid modulo commutators:

* if `l(s w s) = l(w)` for a simple `s`, then `T_w = T_{sws}`;
* if `l(s w s) = l(w) - 2`, write `w = s x s`; cycling the first factor of
  `T_s T_x T_s` to the end and using the quadratic relation gives
  `T_w = (v - 1) T_{sw} + v T_x`.

Every `w` reaches, through length-preserving conjugations, either an element
with such a two-sided descent or a minimal-length element of its class, and
all minimal-length elements of a class have the same image. Rows are found by
breadth-first search over the length-preserving conjugates.

Geck-Rouquier elements and the product
--------------------------------------
`f*_lam = sum_w v^(-l(w)) f_{w,lam} T_{w^-1}` form a basis of Z(H_n). The
relative norm `N_alpha(h) = sum_{d in D_alpha} v^(-l(d)) T_d h T_{d^-1}` turns
central elements of the Young subalgebra H_alpha into central elements of H_n,
and `z1 o z2 = N_(m,n)(z1 (x) z2)` makes Z a commutative graded algebra.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping

from ._memo import memoized
from .combinatorics import Partition, partitions_of, render_partition
from .hecke import (
    HeckeElement, _from_laurent, _lmul, _rmul, _to_laurent, embed_from_young,
    is_central, t_tilde_sq, unit,
)
from .ratfun import ONE, ZERO, LaurentPoly, RatFun, as_ratfun
from .symgroup import (
    Permutation, all_perms, cycle_type, inverse, left_mul_simple, length,
    longest, min_coset_reps, render_permutation, right_mul_simple, w_min,
)

__all__ = [
    "ClassPolyTable", "CentralElement", "class_polynomials", "gr_element",
    "decompose_central", "relative_norm", "circ", "norm_one", "norm_tsq",
    "norm_F", "norm_direct", "central_unit", "gr_basis_element",
]

_V1 = LaurentPoly({1: 1, 0: -1})
_VV = LaurentPoly({1: 1})


def _conj(i: int, w: Permutation) -> Permutation:
    return left_mul_simple(i, right_mul_simple(w, i))


@dataclass(frozen=True)
class ClassPolyTable:
    """`table[w][lam] = f_{w,lam}` for every w in S_n (zero entries omitted)."""
    n: int
    table: Mapping[Permutation, Mapping[Partition, RatFun]]

    def row(self, w) -> dict[Partition, RatFun]:
        r = self.table[tuple(w)]
        return {lam: r.get(lam, ZERO) for lam in partitions_of(self.n)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "lambda", "f"])
        for w in all_perms(self.n):
            r = self.table[w]
            for lam in partitions_of(self.n):
                writer.writerow([render_permutation(w), render_partition(lam),
                                 str(r.get(lam, ZERO))])
        return buf.getvalue()


def _reduce_class(n: int) -> dict[Permutation, dict[Partition, LaurentPoly]]:
    rows: dict = {}

    def row(w: Permutation) -> dict:
        if w in rows:
            return rows[w]
        lam = cycle_type(w)
        ell = length(w)
        if ell == n - len(lam):
            rows[w] = {lam: LaurentPoly({0: 1})}
            return rows[w]
        # search the length-preserving conjugates for a two-sided descent
        seen = {w}
        queue = deque([w])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for i in range(1, n):
                c = _conj(i, u)
                lc = length(c)
                if lc < ell:
                    found = (u, i, c)
                    break
                if lc == ell and c not in seen:
                    seen.add(c)
                    queue.append(c)
        if found is None:
            raise AssertionError(f"no descent among conjugates of {w}")
        u, i, x = found
        assert length(x) == ell - 2
        su = left_mul_simple(i, u)
        out: dict = {}
        for mu, c in row(su).items():
            out[mu] = out.get(mu, LaurentPoly()) + c * _V1
        for mu, c in row(x).items():
            out[mu] = out.get(mu, LaurentPoly()) + c * _VV
        out = {mu: c for mu, c in out.items() if not c.is_zero()}
        for u in seen:
            rows[u] = out
        return out

    for w in sorted(all_perms(n), key=length):
        row(w)
    return rows


@memoized
def class_polynomials(n: int) -> ClassPolyTable:
    """The full table of class polynomials for H_n."""
    from . import cache

    cached = cache.load_class_polynomials(n)
    if cached is not None:
        return cached
    rows = _reduce_class(n)
    table = {w: {lam: RatFun.from_laurent(c) for lam, c in rows[w].items()}
             for w in all_perms(n)}
    out = ClassPolyTable(n, table)
    cache.store_class_polynomials(out)
    return out


def _vpow(k: int) -> RatFun:
    return RatFun.from_laurent(LaurentPoly({k: 1}))


@memoized
def gr_element(lam: Partition) -> HeckeElement:
    """The Geck-Rouquier central element f*_lam."""
    lam = tuple(lam)
    n = sum(lam)
    table = class_polynomials(n).table
    terms = {}
    for w in all_perms(n):
        c = table[w].get(lam)
        if c is not None:
            terms[inverse(w)] = c * _vpow(-length(w))
    return HeckeElement(n, terms)


# ---------------------------------------------------------------------------
# central elements in Geck-Rouquier coordinates


@dataclass(frozen=True, eq=False)
class CentralElement:
    """`sum coords[lam] * f*_lam` in Z(H_n)."""
    n: int
    coords: Mapping[Partition, RatFun] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coords.items():
            lam = tuple(lam)
            if sum(lam) != self.n:
                raise ValueError(f"{lam} is not a partition of {self.n}")
            c = as_ratfun(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "coords", clean)

    def coeff(self, lam) -> RatFun:
        return self.coords.get(tuple(lam), ZERO)

    def terms(self) -> list[tuple[Partition, RatFun]]:
        return [(lam, self.coords[lam]) for lam in partitions_of(self.n)
                if lam in self.coords]

    def __add__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("degree mismatch")
        out = dict(self.coords)
        for lam, c in other.coords.items():
            out[lam] = out.get(lam, ZERO) + c
        return CentralElement(self.n, out)

    def __neg__(self):
        return CentralElement(self.n, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "CentralElement":
        c = as_ratfun(c)
        return CentralElement(self.n, {k: x * c for k, x in self.coords.items()})

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            return circ(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, CentralElement):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    __hash__ = None

    def to_hecke(self) -> HeckeElement:
        out = HeckeElement(self.n, {})
        for lam, c in self.coords.items():
            out = out + gr_element(lam).scale(c)
        return out

    def __str__(self):
        if not self.coords:
            return "0"
        return " + ".join(
            (name if c == ONE else f"({c})*{name}")
            for lam, c in self.terms() for name in [f"f[{render_partition(lam)}]"])

    def to_json(self) -> dict:
        return {"n": self.n, "coords": [{"partition": list(lam), "coeff": str(c)}
                                        for lam, c in self.terms()]}

    @classmethod
    def from_json(cls, data) -> "CentralElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], {tuple(t["partition"]): RatFun.parse(t["coeff"])
                               for t in data["coords"]})


def gr_basis_element(lam) -> CentralElement:
    lam = tuple(lam)
    return CentralElement(sum(lam), {lam: ONE})


def central_unit(n: int) -> CentralElement:
    """The identity T_1 = f*_(1^n) of Z(H_n)."""
    return gr_basis_element((1,) * n)


def decompose_central(h: HeckeElement) -> CentralElement:
    """Coordinates of a central element in the Geck-Rouquier basis.

    The coefficient of `T_{w_lam^-1}` in `f*_mu` is `v^(-l(w_lam))` if
    `mu = lam` and zero otherwise, so on those columns the linear system is
    diagonal; the remaining columns are then checked against the solution.
    """
    if not is_central(h):
        raise ValueError("element is not central")
    n = h.n
    coords = {}
    for lam in partitions_of(n):
        wl = w_min(lam)
        c = h.coeff(inverse(wl))
        if c:
            coords[lam] = c * _vpow(length(wl))
    out = CentralElement(n, coords)
    if out.to_hecke() != h:
        raise ArithmeticError("central element is not in the span of the f*_lam")
    return out


# ---------------------------------------------------------------------------
# relative norms and the product on Z


def _young_generators(alpha) -> list[int]:
    cuts, acc = set(), 0
    for part in alpha[:-1]:
        acc += part
        cuts.add(acc)
    return [i for i in range(1, sum(alpha)) if i not in cuts]


def relative_norm(alpha, h: HeckeElement, check: bool = True) -> HeckeElement:
    """`N_alpha(h)` for `h` central in the Young subalgebra H_alpha."""
    alpha = tuple(alpha)
    n = sum(alpha)
    if h.n != n:
        raise ValueError(f"element of H_{h.n} cannot be normed over {alpha}")
    if check:
        from .symgroup import young_subgroup
        sub = young_subgroup(alpha)
        if any(w not in sub for w in h.terms):
            raise ValueError(f"element does not lie in H_{alpha}")
        if not is_central(h, _young_generators(alpha)):
            raise ValueError(f"element is not central in H_{alpha}")
    a, den = _to_laurent(h)
    reps = min_coset_reps(alpha)
    sandwiches = {reps[0]: a}
    total: dict = {}
    for d in reps:
        if d in sandwiches:
            x = sandwiches[d]
        else:
            # d = s_i d' with d' a shorter coset representative
            i = next(i for i in range(1, n) if d.index(i + 1) < d.index(i))
            x = _lmul(i, _rmul(sandwiches[left_mul_simple(i, d)], i))
            sandwiches[d] = x
        shift = -length(d)
        for w, c in x.items():
            c = c.shift(shift)
            prev = total.get(w)
            total[w] = c if prev is None else prev + c
    return _from_laurent(n, {w: c for w, c in total.items() if c.c}, den)


@memoized
def _circ_basis(lam: Partition, mu: Partition) -> CentralElement:
    m, k = sum(lam), sum(mu)
    h = embed_from_young((m, k), [gr_element(lam), gr_element(mu)])
    return decompose_central(relative_norm((m, k), h, check=False))


def circ(z1: CentralElement, z2: CentralElement) -> CentralElement:
    """The product `z1 o z2 = N_(m,n)(z1 (x) z2)` in Z(H_{m+n})."""
    if z1.n == 0:
        return z2.scale(z1.coeff(()))
    if z2.n == 0:
        return z1.scale(z2.coeff(()))
    out = CentralElement(z1.n + z2.n, {})
    for lam, a in z1.coords.items():
        for mu, b in z2.coords.items():
            out = out + _circ_basis(lam, mu).scale(a * b)
    return out


def _iterated(blocks: list[CentralElement]) -> CentralElement:
    out = central_unit(0)
    for z in blocks:
        out = circ(out, z)
    return out


@memoized
def _tsq_block(k: int) -> CentralElement:
    return decompose_central(t_tilde_sq(longest(k)))


def norm_one(lam: Partition) -> CentralElement:
    """`N_lam(1) = N_(lam_1)(1) o N_(lam_2)(1) o ...`."""
    return _iterated([central_unit(k) for k in lam])


def norm_tsq(lam: Partition) -> CentralElement:
    """`N_lam(Ttilde^2_{w0_lam})`, from the central squares of longest elements."""
    return _iterated([_tsq_block(k) for k in lam])


def norm_F(lam: Partition) -> CentralElement:
    """`N_lam(F_lam)` with `F_lam = f*_(lam_1) (x) f*_(lam_2) (x) ...`."""
    return _iterated([gr_basis_element((k,)) for k in lam])


def norm_direct(family: str, alpha) -> CentralElement:
    """The same norms computed in one step over D_alpha (cross-check path).

    `family` is one of "one", "tsq", "F"; `alpha` may be any composition.
    """
    alpha = tuple(alpha)
    if family == "one":
        blocks = [unit(k) for k in alpha]
    elif family == "tsq":
        blocks = [t_tilde_sq(longest(k)) for k in alpha]
    elif family == "F":
        blocks = [gr_element((k,)) for k in alpha]
    else:
        raise ValueError(f"unknown family {family!r}")
    h = embed_from_young(alpha, blocks)
    return decompose_central(relative_norm(alpha, h))
