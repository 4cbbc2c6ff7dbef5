"""
The Iwahori-Hecke algebra H_n of S_n over Q(v), in the basis {T_w}.

Generators satisfy `(T_i - v)(T_i + 1) = 0` plus the braid relations, so for
`w` in S_n

    T_w T_i = T_{w s_i}                      if l(w s_i) > l(w),
    T_w T_i = (v - 1) T_w + v T_{w s_i}      otherwise,

and symmetrically on the left. This generator rule is the only multiplication
primitive; products of arbitrary elements apply it along reduced words.

Internally, products are carried out on Laurent-polynomial coefficients: an
element is rescaled by a common denominator, multiplied in Z[v, v^-1], and
canonicalized once at the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .ratfun import (
    ONE, ZERO, LaurentPoly, RatFun, as_ratfun,
    _pdivexact, _pgcd, _pmul, _valuation,
)
from .symgroup import (
    Permutation, identity, inverse, is_permutation, left_mul_simple, length,
    reduced_word, right_mul_simple,
)

__all__ = [
    "HeckeElement", "basis", "unit", "t_mul_gen", "gen_mul", "he_mul", "tau",
    "bilinear", "t_check", "t_tilde_sq", "embed_from_young", "is_central",
    "specialize_v1_hecke",
]

_V1 = LaurentPoly({1: 1, 0: -1})  # v - 1


@dataclass(frozen=True, eq=False)
class HeckeElement:
    """`sum terms[w] * T_w` in H_n."""
    n: int
    terms: Mapping[Permutation, RatFun] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            w = tuple(w)
            if len(w) != self.n or not is_permutation(w):
                raise ValueError(f"{w} is not a permutation in S_{self.n}")
            c = as_ratfun(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    def coeff(self, w) -> RatFun:
        return self.terms.get(tuple(w), ZERO)

    def sorted_terms(self) -> list[tuple[Permutation, RatFun]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "HeckeElement"):
        if self.n != other.n:
            raise ValueError(f"cannot combine elements of H_{self.n} and H_{other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return HeckeElement(self.n, out)

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = as_ratfun(c)
        return HeckeElement(self.n, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return he_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            name = "T[" + " ".join(map(str, w)) + "]"
            out.append(name if c == ONE else f"({c})*{name}")
        return " + ".join(out)

    def __repr__(self):
        return f"HeckeElement({self.n}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"n": self.n,
                "terms": [{"w": list(w), "coeff": str(c)} for w, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data) -> "HeckeElement":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], {tuple(t["w"]): RatFun.parse(t["coeff"])
                               for t in data["terms"]})


def basis(w: Permutation) -> HeckeElement:
    """The basis element T_w."""
    w = tuple(w)
    return HeckeElement(len(w), {w: ONE})


def unit(n: int) -> HeckeElement:
    return basis(identity(n))


# ---------------------------------------------------------------------------
# Laurent-coefficient engine


def _to_laurent(h: HeckeElement) -> tuple[dict, tuple]:
    """Write h = A / D with A: perm -> LaurentPoly and D in Z[v] with nonzero
    constant term."""
    dens = []
    for c in h.terms.values():
        d = c._d
        k = _valuation(d)
        dens.append(d[k:])
    big = (1,)
    for d in dens:
        if d != (1,) and d != big:
            g = _pgcd(big, d) if len(d) > 1 and len(big) > 1 else (1,)
            big = _pdivexact(_pmul(big, d), g)
    out = {}
    for w, c in h.terms.items():
        d = c._d
        k = _valuation(d)
        factor = _pdivexact(big, d[k:])
        out[w] = LaurentPoly._raw(-k, _pmul(c._n, factor))
    return out, big


def _from_laurent(n: int, a: dict, den: tuple = (1,)) -> HeckeElement:
    out = {}
    for w, c in a.items():
        if c.c:
            if c.low >= 0:
                num, d = (0,) * c.low + c.c, den
            else:
                num, d = c.c, (0,) * (-c.low) + den
            out[w] = RatFun._make(num, d)
    obj = HeckeElement.__new__(HeckeElement)
    object.__setattr__(obj, "n", n)
    object.__setattr__(obj, "terms", out)
    return obj


def _acc(out: dict, w, c: LaurentPoly):
    prev = out.get(w)
    out[w] = c if prev is None else prev + c


def _clean(out: dict) -> dict:
    return {w: c for w, c in out.items() if c.c}


def _rmul(a: dict, i: int) -> dict:
    """A * T_i on Laurent coefficients."""
    out: dict = {}
    for w, c in a.items():
        ws = right_mul_simple(w, i)
        if w[i - 1] < w[i]:
            _acc(out, ws, c)
        else:
            _acc(out, w, c * _V1)
            _acc(out, ws, c.shift(1))
    return _clean(out)


def _lmul(i: int, a: dict) -> dict:
    """T_i * A on Laurent coefficients."""
    out: dict = {}
    for w, c in a.items():
        sw = left_mul_simple(i, w)
        if w.index(i) < w.index(i + 1):
            _acc(out, sw, c)
        else:
            _acc(out, w, c * _V1)
            _acc(out, sw, c.shift(1))
    return _clean(out)


def _mul_laurent(a: dict, b: dict) -> dict:
    """A * B with Laurent coefficients, sharing prefixes of reduced words."""
    cache: dict = {}
    out: dict = {}
    for w, cb in b.items():
        word = reduced_word(w)
        prefix_w = identity(len(w))
        cur = a
        for i in word:
            prefix_w = right_mul_simple(prefix_w, i)
            hit = cache.get(prefix_w)
            if hit is None:
                hit = _rmul(cur, i)
                cache[prefix_w] = hit
            cur = hit
        for u, ca in cur.items():
            _acc(out, u, ca * cb)
    return _clean(out)


# ---------------------------------------------------------------------------
# public operations


def t_mul_gen(h: HeckeElement, i: int) -> HeckeElement:
    """`h * T_i`."""
    if not 1 <= i < h.n:
        raise ValueError(f"no generator T_{i} in H_{h.n}")
    a, d = _to_laurent(h)
    return _from_laurent(h.n, _rmul(a, i), d)


def gen_mul(i: int, h: HeckeElement) -> HeckeElement:
    """`T_i * h`."""
    if not 1 <= i < h.n:
        raise ValueError(f"no generator T_{i} in H_{h.n}")
    a, d = _to_laurent(h)
    return _from_laurent(h.n, _lmul(i, a), d)


def he_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The product `a * b` in H_n."""
    a._check(b)
    la, da = _to_laurent(a)
    lb, db = _to_laurent(b)
    return _from_laurent(a.n, _mul_laurent(la, lb), _pmul(da, db))


def tau(h: HeckeElement) -> RatFun:
    """The symmetrizing trace: coefficient of T_1."""
    return h.coeff(identity(h.n))


def bilinear(a: HeckeElement, b: HeckeElement) -> RatFun:
    return tau(he_mul(a, b))


def t_check(w: Permutation) -> HeckeElement:
    """Dual basis element `v^(-l(w)) T_{w^-1}`."""
    w = tuple(w)
    return HeckeElement(len(w), {inverse(w): RatFun.from_laurent(LaurentPoly({-length(w): 1}))})


def t_tilde_sq(w: Permutation) -> HeckeElement:
    """`v^(-l(w)) T_w T_w`, the square of the half-integral rescaled T_w."""
    w = tuple(w)
    tw = basis(w)
    return he_mul(tw, tw).scale(RatFun.from_laurent(LaurentPoly({-length(w): 1})))


def embed_from_young(alpha, blocks) -> HeckeElement:
    """Image of `blocks[0] (x) blocks[1] (x) ...` under H_alpha -> H_n."""
    alpha = tuple(alpha)
    if len(alpha) != len(blocks):
        raise ValueError("need one block element per part")
    for a, b in zip(alpha, blocks):
        if b.n != a:
            raise ValueError(f"block element of H_{b.n} does not match part {a}")
    terms = {(): ONE}
    offset = 0
    for a, b in zip(alpha, blocks):
        new = {}
        for w, c in terms.items():
            for u, d in b.terms.items():
                new[w + tuple(offset + x for x in u)] = c * d
        terms = new
        offset += a
    return HeckeElement(sum(alpha), terms)


def is_central(h: HeckeElement, generators=None) -> bool:
    """True iff `h` commutes with every T_i (or with the given T_i)."""
    if generators is None:
        generators = range(1, h.n)
    a, _ = _to_laurent(h)
    return all(_rmul(a, i) == _lmul(i, a) for i in generators)


def specialize_v1_hecke(h: HeckeElement) -> dict[Permutation, Fraction]:
    """Image in the group algebra Q S_n: coefficients at v=1, T_w -> w."""
    out = {}
    for w, c in h.terms.items():
        val = c.eval_at_one()
        if val:
            out[w] = val
    return out
