"""
Homogeneous symmetric functions with coefficients in Q(v).

A `SymFun` is a finite combination of one of the five classical bases

    m  monomial          e  elementary        h  complete homogeneous
    p  power sum         s  Schur

in a fixed degree. Conversion between bases goes through the monomial basis:
the transition matrices M(b, m) over Q are read off from exact polynomial
expansions in `n` variables (enough to determine a degree-n symmetric
polynomial), and Schur functions come from the Jacobi-Trudi determinant in the
h basis. All other matrices are products and exact inverses of these.

The two plethystic substitutions used throughout are diagonal on power sums,

    p_k((v-1)x) = (v^k - 1) p_k(x),      p_k(x/(v-1)) = p_k(x) / (v^k - 1),

and are applied in the p basis only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Mapping

from ._memo import memoized
from .combinatorics import (
    Partition, partitions_of, union_sorted, z_factor, render_partition,
    is_partition,
)
from .linalg import mat_inverse, mat_mul
from .ratfun import ONE, ZERO, V, RatFun, as_ratfun

__all__ = [
    "BASES", "SymFun", "TransitionMatrix", "basis_element", "convert",
    "sf_mul", "plethysm_scale", "m_bar", "h_bar", "transition_matrix",
    "d_matrix", "hall_inner", "lr_coefficients", "specialize_v1",
    "cauchy_check", "expand_in_variables",
]

BASES = ("m", "e", "h", "p", "s")


@dataclass(frozen=True, eq=False)
class SymFun:
    """A degree-`degree` symmetric function, `sum coeffs[lam] * basis[lam]`."""
    degree: int
    basis: str
    coeffs: Mapping[Partition, RatFun] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) != self.degree or not is_partition(lam):
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = as_ratfun(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, n: int, basis: str = "m") -> "SymFun":
        return cls(n, basis, {})

    def coeff(self, lam) -> RatFun:
        return self.coeffs.get(tuple(lam), ZERO)

    def terms(self) -> list[tuple[Partition, RatFun]]:
        """Nonzero terms in canonical (decreasing lexicographic) order."""
        return [(lam, self.coeffs[lam]) for lam in partitions_of(self.degree)
                if lam in self.coeffs]

    def to(self, basis: str) -> "SymFun":
        return convert(self, basis)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _combine(self, other: "SymFun", sign: int) -> "SymFun":
        if self.degree != other.degree:
            raise ValueError("cannot add symmetric functions of different degrees")
        other = convert(other, self.basis)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, ZERO) + (c if sign > 0 else -c)
        return SymFun(self.degree, self.basis, out)

    def __add__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return SymFun(self.degree, self.basis, {k: -c for k, c in self.coeffs.items()})

    def scale(self, c) -> "SymFun":
        c = as_ratfun(c)
        return SymFun(self.degree, self.basis, {k: x * c for k, x in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFun):
            return sf_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(ONE / as_ratfun(other))

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.degree != other.degree:
            return not self.coeffs and not other.coeffs
        return self.coeffs == convert(other, self.basis).coeffs

    __hash__ = None

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for lam, c in self.terms():
            name = f"{self.basis}[{render_partition(lam)}]"
            out.append(name if c == ONE else f"({c})*{name}")
        return " + ".join(out)

    def __repr__(self):
        return f"SymFun({self.degree}, {self.basis!r}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": str(c)}
                      for lam, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data) -> "SymFun":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["degree"], data["basis"],
                   {tuple(t["partition"]): RatFun.parse(t["coeff"])
                    for t in data["terms"]})


def basis_element(basis: str, lam) -> SymFun:
    lam = tuple(lam)
    return SymFun(sum(lam), basis, {lam: ONE})


# ---------------------------------------------------------------------------
# expansion engine: polynomials in k variables as {exponent tuple: int}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _unit(k: int) -> dict:
    return {(0,) * k: 1}


def _generator(kind: str, r: int, k: int) -> dict:
    """e_r, h_r or p_r in k variables."""
    if kind == "e":
        out = {}
        for idx in combinations(range(k), r):
            e = [0] * k
            for i in idx:
                e[i] = 1
            out[tuple(e)] = 1
        return out
    if kind == "h":
        out = {}

        def rec(i, left, e):
            if i == k - 1:
                out[tuple(e + [left])] = 1
                return
            for a in range(left, -1, -1):
                rec(i + 1, left - a, e + [a])

        if k == 0:
            return {} if r else {(): 1}
        rec(0, r, [])
        return out
    if kind == "p":
        out = {}
        for i in range(k):
            e = [0] * k
            e[i] = r
            out[tuple(e)] = 1
        return out
    raise ValueError(kind)


def _multiplicative(kind: str, lam: Partition, k: int) -> dict:
    poly = _unit(k)
    for part in lam:
        poly = _pmul(poly, _generator(kind, part, k))
    return poly


def _jacobi_trudi(lam: Partition) -> dict[Partition, int]:
    """s_lam as an integer combination of h_mu, via det(h_{lam_i - i + j})."""
    ell = len(lam)
    out: dict = {}
    for sigma in permutations(range(ell)):
        # sign of sigma by inversion count
        inv = sum(1 for a in range(ell) for b in range(a + 1, ell) if sigma[a] > sigma[b])
        parts = []
        for i in range(ell):
            r = lam[i] - i + sigma[i]
            if r < 0:
                break
            if r:
                parts.append(r)
        else:
            mu = tuple(sorted(parts, reverse=True))
            out[mu] = out.get(mu, 0) + (-1) ** inv
    return {mu: c for mu, c in out.items() if c}


@memoized
def _to_m(basis: str, n: int) -> list[list[Fraction]]:
    """Rows of M(basis, m) over Q, indexed by partitions_of(n)."""
    parts = partitions_of(n)
    if basis == "m":
        return [[Fraction(int(i == j)) for j in range(len(parts))]
                for i in range(len(parts))]
    if basis == "s":
        h_rows = {mu: row for mu, row in zip(parts, _to_m("h", n))}
        out = []
        for lam in parts:
            row = [Fraction(0)] * len(parts)
            for mu, c in _jacobi_trudi(lam).items():
                row = [x + c * y for x, y in zip(row, h_rows[mu])]
            out.append(row)
        return out
    out = []
    for lam in parts:
        poly = _multiplicative(basis, lam, n)
        out.append([Fraction(poly.get(mu + (0,) * (n - len(mu)), 0)) for mu in parts])
    return out


@memoized
def _from_m(basis: str, n: int) -> list[list[Fraction]]:
    """Rows of M(m, basis) over Q."""
    return mat_inverse(_to_m(basis, n))


def convert(f: SymFun, target: str) -> SymFun:
    """Re-express `f` in the basis `target`, exactly."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target or not f.coeffs:
        return SymFun(f.degree, target, f.coeffs) if not f.coeffs else f
    parts = partitions_of(f.degree)
    index = {lam: i for i, lam in enumerate(parts)}
    vec = [ZERO] * len(parts)
    for lam, c in f.coeffs.items():
        row = _to_m(f.basis, f.degree)[index[lam]]
        for j, x in enumerate(row):
            if x:
                vec[j] = vec[j] + c * x
    if target != "m":
        inv = _from_m(target, f.degree)
        out = [ZERO] * len(parts)
        for i, c in enumerate(vec):
            if c:
                for j, x in enumerate(inv[i]):
                    if x:
                        out[j] = out[j] + c * x
        vec = out
    return SymFun(f.degree, target, {lam: c for lam, c in zip(parts, vec) if c})


def sf_mul(f: SymFun, g: SymFun) -> SymFun:
    """Product in the ring of symmetric functions, returned in `f`'s basis.

    Computed in the p basis, where products concatenate partitions.
    """
    fp, gp = convert(f, "p"), convert(g, "p")
    out: dict = {}
    for a, ca in fp.coeffs.items():
        for b, cb in gp.coeffs.items():
            lam = union_sorted(a, b)
            out[lam] = out.get(lam, ZERO) + ca * cb
    return convert(SymFun(f.degree + g.degree, "p", out), f.basis)


def _pleth_factor(lam: Partition) -> RatFun:
    out = ONE
    for part in lam:
        out = out * (V ** part - 1)
    return out


def plethysm_scale(f: SymFun, mode: str) -> SymFun:
    """`f((v-1)x)` for mode "expand", `f(x/(v-1))` for mode "contract"."""
    if mode not in ("expand", "contract"):
        raise ValueError(f"mode must be 'expand' or 'contract', not {mode!r}")
    fp = convert(f, "p")
    out = {}
    for lam, c in fp.coeffs.items():
        factor = _pleth_factor(lam)
        out[lam] = c * factor if mode == "expand" else c / factor
    return convert(SymFun(f.degree, "p", out), f.basis)


@memoized
def m_bar(lam: Partition) -> SymFun:
    """`(v-1)^len(lam) * m_lam(x/(v-1))`, in the m basis."""
    lam = tuple(lam)
    return plethysm_scale(basis_element("m", lam), "contract").scale(
        (V - 1) ** len(lam))


@memoized
def h_bar(mu: Partition) -> SymFun:
    """`prod_i h_{mu_i}((v-1)x) / (v-1)`, in the h basis."""
    mu = tuple(mu)
    out = basis_element("p", ())
    for part in mu:
        factor = plethysm_scale(basis_element("h", (part,)), "expand")
        out = sf_mul(out, factor.scale(ONE / (V - 1)))
    return convert(out, "h")


# ---------------------------------------------------------------------------
# transition matrices


@dataclass(frozen=True)
class TransitionMatrix:
    """Row `lam` expands `source[lam]` in the `target` basis; rows and columns
    follow `partitions_of(n)`."""
    n: int
    source: str
    target: str
    entries: list

    @property
    def order(self) -> list[Partition]:
        return partitions_of(self.n)

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        return TransitionMatrix(self.n, self.source, other.target,
                                mat_mul(self.entries, other.entries, zero=ZERO))

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return self.n == other.n and all(
            as_ratfun(x) == as_ratfun(y)
            for ra, rb in zip(self.entries, other.entries) for x, y in zip(ra, rb))

    __hash__ = None

    def inverse(self) -> "TransitionMatrix":
        return TransitionMatrix(self.n, self.target, self.source,
                                mat_inverse(self.entries, one=ONE, zero=ZERO))


def transition_matrix(source: str, target: str, n: int) -> TransitionMatrix:
    """M(source, target) with exact entries in Q(v)."""
    a = _to_m(source, n)
    b = _from_m(target, n)
    ent = mat_mul(a, b, zero=Fraction(0))
    return TransitionMatrix(n, source, target,
                            [[as_ratfun(x) for x in row] for row in ent])


def d_matrix(n: int) -> TransitionMatrix:
    """diag((v-1)^(n - len(lam)))."""
    parts = partitions_of(n)
    ent = [[(V - 1) ** (n - len(lam)) if i == j else ZERO
            for j in range(len(parts))] for i, lam in enumerate(parts)]
    return TransitionMatrix(n, "D", "D", ent)


# ---------------------------------------------------------------------------
# pairing, Littlewood-Richardson, specialization


def hall_inner(f: SymFun, g: SymFun) -> RatFun:
    """Hall inner product, `<p_lam, p_mu> = delta * z_lam`."""
    if f.degree != g.degree:
        raise ValueError("hall_inner needs equal degrees")
    fp, gp = convert(f, "p"), convert(g, "p")
    out = ZERO
    for lam, c in fp.coeffs.items():
        d = gp.coeffs.get(lam)
        if d is not None:
            out = out + c * d * z_factor(lam)
    return out


@memoized
def lr_coefficients(mu: Partition, lam: Partition) -> dict[Partition, int]:
    """`c^nu_{mu lam}`: coefficient of s_nu in s_mu * s_lam."""
    prod_ = sf_mul(basis_element("s", mu), basis_element("s", lam))
    out = {}
    for nu, c in prod_.terms():
        val = c.constant()
        if val.denominator != 1 or val < 0:
            raise ArithmeticError(f"non-integral LR coefficient {c} at {nu}")
        out[nu] = int(val)
    return out


def specialize_v1(f: SymFun) -> SymFun:
    """Coefficient-wise evaluation at v=1 (raises PoleError on a pole)."""
    return SymFun(f.degree, f.basis,
                  {lam: as_ratfun(c.eval_at_one()) for lam, c in f.coeffs.items()})


def expand_in_variables(f: SymFun, k: int) -> dict[tuple, RatFun]:
    """The polynomial `f(x_1, ..., x_k)` as {exponent tuple: coefficient}."""
    fm = convert(f, "m")
    out: dict = {}
    for lam, c in fm.coeffs.items():
        if len(lam) > k:
            continue
        for e in set(permutations(lam + (0,) * (k - len(lam)))):
            out[e] = out.get(e, ZERO) + c
    return {e: c for e, c in out.items() if c}


def _bilinear_sum(pairs: Iterable[tuple[SymFun, SymFun]], k: int) -> dict:
    out: dict = {}
    for f, g in pairs:
        fx, gy = expand_in_variables(f, k), expand_in_variables(g, k)
        for a, ca in fx.items():
            for b, cb in gy.items():
                out[a + b] = out.get(a + b, ZERO) + ca * cb
    return {e: c for e, c in out.items() if c}


def cauchy_check(n: int, k: int) -> bool:
    """Check `sum h_bar_lam(x) m_bar_lam(y) = sum s_lam(x) s_lam(y)` in degree
    n as an exact polynomial identity in variables x_1..x_k, y_1..y_k."""
    if k < n:
        raise ValueError("need at least n variables")
    parts = partitions_of(n)
    lhs = _bilinear_sum(((h_bar(lam), m_bar(lam)) for lam in parts), k)
    rhs = _bilinear_sum(((basis_element("s", lam), basis_element("s", lam))
                         for lam in parts), k)
    return lhs == rhs
