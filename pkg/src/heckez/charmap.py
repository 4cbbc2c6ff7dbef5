"""
Characters of H_n and the maps between the center, characters and symmetric
functions.

* `character_table(n)`: `chi^lam_v(T_{w_mu})` read off from the expansion
  `hbar_mu = sum_lam chi^lam_v(T_{w_mu}) s_lam`.
* `char_value(lam, w)`: any `chi^lam_v(T_w)`, through class polynomials.
* `schur_element`, `poincare`, `generic_degree`, `central_idempotent`.
* `psi`: the Frobenius map Z -> Lambda_v, `f*_lam -> mbar_lam`, and its
  inverse.
* `ch_v`: `chi^lam_v -> (P_n(v) / d_lam(v)) * psi(e^lam_v)`, computed from
  this definition; its value on irreducibles is checked against s_lam,
  never assumed.
* `theta`: `chi -> sum_w chi(T_w) T_w^vee`, as a central element.
* `classical_psi`: the v = 1 map on class sums, `c_lam -> p_lam / z_lam`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping

from ._memo import memoized
from .center import (
    CentralElement, class_polynomials, decompose_central,
)
from .combinatorics import (
    Partition, partitions_of, render_partition, standard_tableaux_count,
    z_factor,
)
from .hecke import HeckeElement, specialize_v1_hecke
from .linalg import mat_inverse
from .ratfun import ONE, ZERO, LaurentPoly, RatFun, as_ratfun
from .symfunc import (
    SymFun, convert, h_bar, lr_coefficients, m_bar,
)
from .symgroup import (
    Permutation, all_perms, cycle_type, inverse, length, w_min,
)

__all__ = [
    "CharacterTable", "VirtualCharacter", "character_table", "char_value",
    "schur_element", "poincare", "generic_degree", "central_idempotent",
    "idempotent_coords", "psi", "psi_inv", "ch_v", "theta", "induce",
    "classical_psi", "class_sum_coords", "star_product", "irreducible",
]


def _vpow(k: int) -> RatFun:
    return RatFun.from_laurent(LaurentPoly({k: 1}))


@dataclass(frozen=True)
class CharacterTable:
    """`values[i][j] = chi^{rows[i]}_v(T_{w_{cols[j]}})`."""
    n: int
    values: list

    @property
    def rows(self) -> list[Partition]:
        return partitions_of(self.n)

    cols = rows

    def __getitem__(self, key) -> RatFun:
        lam, mu = key
        return self.values[self.rows.index(tuple(lam))][self.cols.index(tuple(mu))]

    def specialize_v1(self) -> list[list[Fraction]]:
        return [[x.eval_at_one() for x in row] for row in self.values]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["lambda"] + [render_partition(mu) for mu in self.cols])
        for lam, row in zip(self.rows, self.values):
            writer.writerow([render_partition(lam)] + [str(x) for x in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "row_order": [render_partition(lam) for lam in self.rows],
            "col_order": [render_partition(mu) for mu in self.cols],
            "values": [[str(x) for x in row] for row in self.values],
        }

    def to_latex(self) -> str:
        return latex_tabular(self.rows, self.cols, self.values, corner=r"\lambda \backslash \mu")


def latex_tabular(rows, cols, values, corner: str = "") -> str:
    """A minimal LaTeX tabular with partition labels."""
    def cell(x) -> str:
        return "$" + str(x).replace("*", "") + "$"

    lines = [r"\begin{tabular}{c|" + "c" * len(cols) + "}",
             " & ".join([f"${corner}$"] + [f"$({render_partition(mu)})$" for mu in cols])
             + r" \\", r"\hline"]
    for lam, row in zip(rows, values):
        lines.append(" & ".join([f"$({render_partition(lam)})$"] + [cell(x) for x in row])
                     + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


@memoized
def character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    cols = [convert(h_bar(mu), "s") for mu in parts]
    values = [[col.coeff(lam) for col in cols] for lam in parts]
    return CharacterTable(n, values)


@memoized
def _char_values(lam: Partition) -> dict[Permutation, RatFun]:
    """chi^lam_v(T_w) for all w in S_n."""
    n = sum(lam)
    table = class_polynomials(n).table
    ct = character_table(n)
    row = dict(zip(ct.cols, ct.values[ct.rows.index(lam)]))
    out = {}
    for w in all_perms(n):
        acc = ZERO
        for mu, f in table[w].items():
            acc = acc + f * row[mu]
        out[w] = acc
    return out


def char_value(lam: Partition, w: Permutation) -> RatFun:
    """`chi^lam_v(T_w) = sum_mu f_{w,mu} chi^lam_v(T_{w_mu})`."""
    return _char_values(tuple(lam))[tuple(w)]


@memoized
def poincare(n: int) -> RatFun:
    """`P_n(v) = sum_w v^l(w)`."""
    coeffs: dict = {}
    for w in all_perms(n):
        k = length(w)
        coeffs[k] = coeffs.get(k, 0) + 1
    return RatFun.from_laurent(LaurentPoly(coeffs))


@memoized
def schur_element(lam: Partition) -> RatFun:
    """`kappa_lam = (1/d_lam) sum_w v^(-l(w)) chi(T_w) chi(T_{w^-1})`, the
    orthogonality relation of the symmetrizing trace."""
    lam = tuple(lam)
    vals = _char_values(lam)
    acc = ZERO
    for w, x in vals.items():
        if x:
            acc = acc + x * vals[inverse(w)] * _vpow(-length(w))
    return acc / standard_tableaux_count(lam)


def generic_degree(lam: Partition) -> RatFun:
    lam = tuple(lam)
    return poincare(sum(lam)) / schur_element(lam)


def idempotent_coords(lam: Partition) -> CentralElement:
    """`e^lam_v = (1/kappa_lam) sum_mu chi^lam_v(T_{w_mu}) f*_mu`."""
    lam = tuple(lam)
    n = sum(lam)
    ct = character_table(n)
    k = schur_element(lam)
    return CentralElement(n, {mu: ct[lam, mu] / k for mu in ct.cols})


@memoized
def central_idempotent(lam: Partition) -> HeckeElement:
    """`e^lam_v = (1/kappa_lam) sum_w chi^lam_v(T_w) T_w^vee`.

    Cross-checked against the Geck-Rouquier expansion `idempotent_coords`.
    """
    lam = tuple(lam)
    n = sum(lam)
    k = schur_element(lam)
    terms = {}
    for w, x in _char_values(lam).items():
        if x:
            terms[inverse(w)] = x * _vpow(-length(w)) / k
    e = HeckeElement(n, terms)
    if e != idempotent_coords(lam).to_hecke():
        raise ArithmeticError(f"idempotent formulas disagree for {lam}")
    return e


# ---------------------------------------------------------------------------
# the Frobenius map


def psi(z: CentralElement) -> SymFun:
    """`f*_lam -> mbar_lam`, extended linearly (result in the m basis)."""
    out = SymFun.zero(z.n, "m")
    for lam, c in z.coords.items():
        out = out + m_bar(lam).scale(c)
    return out


@memoized
def _mbar_inverse(n: int) -> list[list[RatFun]]:
    parts = partitions_of(n)
    mat = [[m_bar(lam).coeff(mu) for mu in parts] for lam in parts]
    return mat_inverse(mat, one=ONE, zero=ZERO)


def psi_inv(f: SymFun) -> CentralElement:
    """Coordinates of `f` in the mbar basis, as a central element."""
    parts = partitions_of(f.degree)
    fm = convert(f, "m")
    inv = _mbar_inverse(f.degree)
    coords = {}
    for j, lam in enumerate(parts):
        acc = ZERO
        for i, mu in enumerate(parts):
            c = fm.coeffs.get(mu)
            if c is not None and inv[i][j]:
                acc = acc + c * inv[i][j]
        coords[lam] = acc
    return CentralElement(f.degree, coords)


def star_product(f: SymFun, g: SymFun) -> SymFun:
    """The product on Lambda^n_v with `s_lam * s_mu = delta kappa_lam s_lam`,
    under which psi restricted to Z(H_n) is multiplicative."""
    if f.degree != g.degree:
        raise ValueError("star product needs equal degrees")
    fs, gs = convert(f, "s"), convert(g, "s")
    out = {lam: c * gs.coeff(lam) * schur_element(lam) for lam, c in fs.coeffs.items()}
    return SymFun(f.degree, "s", out)


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True, eq=False)
class VirtualCharacter:
    """`sum coords[lam] * chi^lam_v` on H_n."""
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

    def __add__(self, other):
        out = dict(self.coords)
        for lam, c in other.coords.items():
            out[lam] = out.get(lam, ZERO) + c
        return VirtualCharacter(self.n, out)

    def scale(self, c) -> "VirtualCharacter":
        c = as_ratfun(c)
        return VirtualCharacter(self.n, {k: x * c for k, x in self.coords.items()})

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    __hash__ = None

    def value(self, w: Permutation) -> RatFun:
        acc = ZERO
        for lam, c in self.coords.items():
            acc = acc + c * char_value(lam, w)
        return acc

    def __str__(self):
        if not self.coords:
            return "0"
        return " + ".join(f"({self.coords[lam]})*chi[{render_partition(lam)}]"
                          for lam in partitions_of(self.n) if lam in self.coords)


def irreducible(lam) -> VirtualCharacter:
    lam = tuple(lam)
    return VirtualCharacter(sum(lam), {lam: ONE})


def ch_v(chi: VirtualCharacter) -> SymFun:
    """`chi^lam_v -> (P_n(v) / d_lam(v)) psi(e^lam_v)`, extended linearly."""
    n = chi.n
    out = SymFun.zero(n, "s")
    for lam, c in chi.coords.items():
        e = decompose_central(central_idempotent(lam))
        out = out + psi(e).scale(c * poincare(n) / generic_degree(lam))
    return convert(out, "s")


def theta(chi: VirtualCharacter) -> CentralElement:
    """`chi* = sum_w chi(T_w) T_w^vee`, decomposed in the Geck-Rouquier basis."""
    n = chi.n
    terms = {}
    for w in all_perms(n):
        x = chi.value(w)
        if x:
            terms[inverse(w)] = x * _vpow(-length(w))
    return decompose_central(HeckeElement(n, terms))


def induce(chi1: VirtualCharacter, chi2: VirtualCharacter) -> VirtualCharacter:
    """Induction from H_m (x) H_n to H_{m+n}, via Littlewood-Richardson
    coefficients on irreducibles."""
    out: dict = {}
    for mu, a in chi1.coords.items():
        for lam, b in chi2.coords.items():
            for nu, c in lr_coefficients(mu, lam).items():
                out[nu] = out.get(nu, ZERO) + a * b * c
    return VirtualCharacter(chi1.n + chi2.n, out)


# ---------------------------------------------------------------------------
# v = 1


def class_sum_coords(elem: Mapping[Permutation, Fraction], n: int) -> dict[Partition, Fraction]:
    """Coordinates of a central group-algebra element in the class sums c_lam.

    Raises ValueError if `elem` is not constant on conjugacy classes.
    """
    coords = {lam: Fraction(elem.get(w_min(lam), 0)) for lam in partitions_of(n)}
    for w in all_perms(n):
        if Fraction(elem.get(w, 0)) != coords[cycle_type(w)]:
            raise ValueError("group algebra element is not a class function")
    return {lam: c for lam, c in coords.items() if c}


def classical_psi(coords: Mapping[Partition, Fraction]) -> SymFun:
    """`c_lam -> p_lam / z_lam` on class-sum coordinates (degree inferred)."""
    if not coords:
        raise ValueError("empty class function; degree unknown")
    n = sum(next(iter(coords)))
    return SymFun(n, "p", {lam: as_ratfun(Fraction(c) / z_factor(lam))
                           for lam, c in coords.items()})


def specialized_class_sums(z: CentralElement) -> dict[Partition, Fraction]:
    """`z` at v = 1, in class-sum coordinates."""
    return class_sum_coords(specialize_v1_hecke(z.to_hecke()), z.n)


def classical_degree(lam: Partition) -> int:
    return standard_tableaux_count(tuple(lam))


def group_order(n: int) -> int:
    return factorial(n)
