"""
Exact verification suites for the identities relating Z, Lambda_v and the
characters of H_n.

Every suite is a function of the degree `n` returning a list of failures
`(label, payload)`; an empty list means the identity holds exactly in degree
n. `run` wraps suites into a `VerificationReport`.

Some suites only run up to a size bound (`SUITES[name].max_n`), because their
cost grows with full products in H_n; above it they are not run at all and
the report says so.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from .center import (
    circ, decompose_central, gr_basis_element, gr_element,
    norm_direct, norm_F, norm_one, norm_tsq,
)
from .charmap import (
    central_idempotent, ch_v, char_value, character_table, class_sum_coords,
    classical_psi, generic_degree, idempotent_coords, induce, irreducible,
    poincare, psi, schur_element, theta,
)
from .combinatorics import (
    compositions_of, partitions_of, standard_tableaux_count,
    zero_one_matrix_count, z_factor,
)
from .hecke import (
    HeckeElement, he_mul, is_central, specialize_v1_hecke, tau, unit,
)
from .linalg import mat_mul
from .oracles import murnaghan_nakayama, regular_trace_character
from .ratfun import ONE, ZERO, V, RatFun
from .symfunc import (
    SymFun, basis_element, cauchy_check, d_matrix, m_bar, plethysm_scale,
    sf_mul, specialize_v1, transition_matrix,
)
from .symgroup import all_perms

__all__ = ["CheckResult", "VerificationReport", "SUITES", "run", "selectors"]


@dataclass
class CheckResult:
    identity: str
    n: int
    passed: bool
    counterexample: str | None
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.identity} n={self.n} ({self.elapsed:.2f}s)"
        if self.counterexample:
            out += f" :: {self.counterexample}"
        return out


@dataclass
class VerificationReport:
    results: list[CheckResult] = field(default_factory=list)
    skipped: list[tuple[str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = [r.line() for r in self.results]
        out += [f"SKIP {name} n={n} (above size bound)" for name, n in self.skipped]
        return out


# ---------------------------------------------------------------------------
# helpers


def _vm1(k: int) -> RatFun:
    return (V - 1) ** k


def _coords_row(z, parts) -> list[RatFun]:
    return [z.coeff(mu) for mu in parts]


def _fail(label, *payload) -> tuple[str, str]:
    return (label, "; ".join(str(p) for p in payload))


# ---------------------------------------------------------------------------
# suites


def suite_five_bases(n: int) -> list:
    """psi on the five distinguished bases of Z(H_n)."""
    out = []
    for lam in partitions_of(n):
        ell = len(lam)
        contract = {b: plethysm_scale(basis_element(b, lam), "contract")
                    for b in ("m", "e", "h", "p")}
        checks = {
            "a:f*": (psi(gr_basis_element(lam)), contract["m"].scale(_vm1(ell))),
            "b:e": (psi(decompose_central(central_idempotent(lam))),
                    basis_element("s", lam).scale(ONE / schur_element(lam))),
            "c:N1": (psi(norm_one(lam)), contract["e"].scale(_vm1(n))),
            "d:NT2": (psi(norm_tsq(lam)), contract["h"].scale(_vm1(n))),
            "e:NF": (psi(norm_F(lam)), contract["p"].scale(_vm1(ell))),
        }
        for name, (got, want) in checks.items():
            if got != want:
                out.append(_fail(f"{name} {lam}", got, want))
    return out


def suite_psi_mult(n: int) -> list:
    """psi(f*_mu o f*_lam) = psi(f*_mu) psi(f*_lam) for |mu| + |lam| = n."""
    out = []
    for m in range(1, n):
        for mu in partitions_of(m):
            for lam in partitions_of(n - m):
                got = psi(circ(gr_basis_element(mu), gr_basis_element(lam)))
                want = sf_mul(m_bar(mu), m_bar(lam))
                if got != want:
                    out.append(_fail(f"{mu} o {lam}", got, want))
    return out


def suite_lascoux(n: int) -> list:
    """N_alpha(1) = sum_mu (v-1)^(n - l(mu)) b_{alpha mu} f*_mu, every
    composition alpha, with b from brute-force 0-1 matrix enumeration."""
    out = []
    for alpha in compositions_of(n):
        got = norm_direct("one", alpha)
        for mu in partitions_of(n):
            want = _vm1(n - len(mu)) * zero_one_matrix_count(alpha, mu)
            if got.coeff(mu) != want:
                out.append(_fail(f"alpha={alpha} mu={mu}", got.coeff(mu), want))
    return out


def suite_eq_nt2(n: int) -> list:
    """N_n(Ttilde^2_{w0}) = sum_mu (v-1)^(n - l(mu)) f*_mu."""
    if n == 0:
        return []
    got = norm_direct("tsq", (n,))
    return [_fail(f"mu={mu}", got.coeff(mu), _vm1(n - len(mu)))
            for mu in partitions_of(n) if got.coeff(mu) != _vm1(n - len(mu))]


def suite_transition(n: int) -> list:
    """Transition matrices of N1, NT2, NF to the Geck-Rouquier basis."""
    parts = partitions_of(n)
    d = d_matrix(n)
    dinv = d.inverse()
    want = {
        "N1": (transition_matrix("e", "m", n) @ d).entries,
        "NT2": (transition_matrix("h", "m", n) @ d).entries,
        "NF": mat_mul(mat_mul(dinv.entries, transition_matrix("p", "m", n).entries,
                              zero=ZERO), d.entries, zero=ZERO),
    }
    got = {
        "N1": [_coords_row(norm_one(lam), parts) for lam in parts],
        "NT2": [_coords_row(norm_tsq(lam), parts) for lam in parts],
        "NF": [_coords_row(norm_F(lam), parts) for lam in parts],
    }
    out = []
    for fam in want:
        for i, lam in enumerate(parts):
            for j, mu in enumerate(parts):
                if got[fam][i][j] != want[fam][i][j]:
                    out.append(_fail(f"{fam}[{lam},{mu}]", got[fam][i][j], want[fam][i][j]))
    return out


def suite_norms_direct(n: int) -> list:
    """Iterated-o norms agree with one-step norms over D_lam."""
    out = []
    for lam in partitions_of(n):
        for fam, fn in (("one", norm_one), ("tsq", norm_tsq), ("F", norm_F)):
            a, b = fn(lam), norm_direct(fam, lam)
            if a != b:
                out.append(_fail(f"{fam} {lam}", a, b))
    return out


def suite_norm_symmetric(n: int) -> list:
    """N_alpha(1) depends only on the multiset of parts of alpha."""
    out = []
    for alpha in compositions_of(n):
        lam = tuple(sorted(alpha, reverse=True))
        if norm_direct("one", alpha) != norm_direct("one", lam):
            out.append(_fail(f"alpha={alpha}", lam))
    return out


def suite_characters(n: int) -> list:
    """Character table: v=1 against Murnaghan-Nakayama, degree column against
    SYT counts, row orthogonality at v=1."""
    out = []
    ct = character_table(n)
    at1 = ct.specialize_v1()
    parts = partitions_of(n)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            if at1[i][j] != murnaghan_nakayama(lam, mu):
                out.append(_fail(f"v=1 chi^{lam}({mu})", at1[i][j],
                                 murnaghan_nakayama(lam, mu)))
        if n and ct[lam, (1,) * n] != standard_tableaux_count(lam):
            out.append(_fail(f"degree {lam}", ct[lam, (1,) * n]))
    order = sum(1 for _ in all_perms(n))
    for i, a in enumerate(parts):
        for k, b in enumerate(parts):
            s = sum(Fraction(order, z_factor(mu)) * at1[i][j] * at1[k][j]
                    for j, mu in enumerate(parts))
            if s != (order if i == k else 0):
                out.append(_fail(f"orthogonality {a},{b}", s))
    return out


def suite_characters_trace(n: int) -> list:
    """Class-polynomial character values agree with traces on H e^lam."""
    out = []
    perms = all_perms(n)
    for lam in partitions_of(n):
        vals = regular_trace_character(central_idempotent(lam),
                                       standard_tableaux_count(lam), perms)
        for w in perms:
            if vals[w] != char_value(lam, w):
                out.append(_fail(f"chi^{lam}(T_{w})", vals[w], char_value(lam, w)))
    return out


def suite_dual_ram(n: int) -> list:
    """s_lam = sum_mu chi^lam_v(T_{w_mu}) mbar_mu."""
    out = []
    ct = character_table(n)
    for lam in partitions_of(n):
        acc = SymFun.zero(n, "m")
        for mu in partitions_of(n):
            acc = acc + m_bar(mu).scale(ct[lam, mu])
        if acc != basis_element("s", lam):
            out.append(_fail(f"{lam}", acc))
    return out


def suite_degrees(n: int) -> list:
    """Generic degrees are polynomials specializing to SYT counts; Poincare
    polynomial matches its product formula."""
    out = []
    prod_form = ONE
    for k in range(1, n + 1):
        prod_form = prod_form * (V ** k - 1) / (V - 1)
    if poincare(n) != prod_form:
        out.append(_fail("poincare", poincare(n), prod_form))
    for lam in partitions_of(n):
        d = generic_degree(lam)
        if not d.is_polynomial():
            out.append(_fail(f"d_{lam} not polynomial", d))
        elif d.eval_at_one() != standard_tableaux_count(lam):
            out.append(_fail(f"d_{lam}(1)", d.eval_at_one()))
    return out


def suite_central(n: int) -> list:
    """Every f*_lam is central and specializes to the class sum c_lam."""
    out = []
    for lam in partitions_of(n):
        g = gr_element(lam)
        if not is_central(g):
            out.append(_fail(f"f*_{lam} not central"))
        at1 = specialize_v1_hecke(g)
        if class_sum_coords(at1, n) != {lam: 1}:
            out.append(_fail(f"f*_{lam} at v=1", at1))
    return out


def suite_idempotents(n: int) -> list:
    """e^lam e^mu = delta e^lam and sum e^lam = 1."""
    out = []
    parts = partitions_of(n)
    es = {lam: central_idempotent(lam) for lam in parts}
    total = HeckeElement(n, {})
    for lam in parts:
        total = total + es[lam]
        for mu in parts:
            prod_ = he_mul(es[lam], es[mu])
            want = es[lam] if lam == mu else HeckeElement(n, {})
            if prod_ != want:
                out.append(_fail(f"e^{lam} e^{mu}", prod_))
    if total != unit(n):
        out.append(_fail("sum of idempotents", total))
    return out


def _random_element(rng: random.Random, n: int, size: int) -> HeckeElement:
    perms = all_perms(n)
    terms = {}
    for _ in range(size):
        c = RatFun(rng.randint(-3, 3)) + V ** rng.randint(-2, 2) * rng.randint(-2, 2)
        terms[rng.choice(perms)] = c
    return HeckeElement(n, terms)


def suite_tau(n: int, pairs: int = 1000, seed: int = 20121201) -> list:
    """tau(ab) = tau(ba) on random sparse pairs."""
    rng = random.Random(seed + n)
    out = []
    for k in range(pairs):
        a = _random_element(rng, n, rng.randint(1, 4))
        b = _random_element(rng, n, rng.randint(1, 4))
        if tau(he_mul(a, b)) != tau(he_mul(b, a)):
            out.append(_fail(f"pair {k}", a, b))
            break
    return out


def _gens_of_size(m: int) -> list:
    return [gr_basis_element(lam) for lam in partitions_of(m)]


def suite_circ(n: int) -> list:
    """o is commutative on generator pairs and associative on generator
    triples of total size n."""
    out = []
    for m in range(0, n + 1):
        for a, b in product(_gens_of_size(m), _gens_of_size(n - m)):
            if circ(a, b) != circ(b, a):
                out.append(_fail("commutativity", a, b))
    for m1 in range(0, n + 1):
        for m2 in range(0, n - m1 + 1):
            m3 = n - m1 - m2
            for a, b, c in product(_gens_of_size(m1), _gens_of_size(m2), _gens_of_size(m3)):
                if circ(circ(a, b), c) != circ(a, circ(b, c)):
                    out.append(_fail("associativity", a, b, c))
    return out


def suite_specialization(n: int) -> list:
    """mbar_lam at v=1 is p_lam / z_lam; psi at v=1 is the classical map."""
    out = []
    for lam in partitions_of(n):
        want = basis_element("p", lam).scale(Fraction(1, z_factor(lam)))
        if specialize_v1(m_bar(lam)) != want:
            out.append(_fail(f"mbar_{lam}(1)", specialize_v1(m_bar(lam))))
    return out


def suite_classical(n: int) -> list:
    out = []
    for lam in partitions_of(n):
        g = gr_basis_element(lam)
        lhs = specialize_v1(psi(g))
        rhs = classical_psi(class_sum_coords(specialize_v1_hecke(g.to_hecke()), n))
        if lhs != rhs:
            out.append(_fail(f"{lam}", lhs, rhs))
    return out


def suite_cauchy(n: int) -> list:
    return [] if cauchy_check(n, n) else [_fail("deformed Cauchy identity")]


def suite_chv(n: int) -> list:
    """ch_v(chi^lam) = s_lam; psi o theta = ch_v; theta(chi^lam) is
    kappa_lam e^lam."""
    out = []
    for lam in partitions_of(n):
        chi = irreducible(lam)
        c = ch_v(chi)
        if c != basis_element("s", lam):
            out.append(_fail(f"ch_v {lam}", c))
        t = theta(chi)
        if psi(t) != c:
            out.append(_fail(f"psi theta {lam}", psi(t), c))
        if t != idempotent_coords(lam).scale(schur_element(lam)):
            out.append(_fail(f"theta {lam}", t))
    return out


def suite_induce(n: int) -> list:
    """ch_v(ind(a x b)) = ch_v(a) ch_v(b) on irreducible pairs, m + k = n."""
    out = []
    for m in range(1, n):
        for mu in partitions_of(m):
            for lam in partitions_of(n - m):
                a, b = irreducible(mu), irreducible(lam)
                got = ch_v(induce(a, b))
                want = sf_mul(ch_v(a), ch_v(b))
                if got != want:
                    out.append(_fail(f"{mu} x {lam}", got, want))
    return out


@dataclass(frozen=True)
class Suite:
    func: Callable[[int], list]
    max_n: int | None = None
    doc: str = ""


SUITES: dict[str, Suite] = {
    "five-bases": Suite(suite_five_bases),
    "psi-mult": Suite(suite_psi_mult),
    "lascoux": Suite(suite_lascoux, 6),
    "eq-nt2": Suite(suite_eq_nt2),
    "transition": Suite(suite_transition),
    "norms-direct": Suite(suite_norms_direct, 4),
    "norm-symmetric": Suite(suite_norm_symmetric, 5),
    "central": Suite(suite_central),
    "characters": Suite(suite_characters),
    "characters-trace": Suite(suite_characters_trace, 4),
    "dual-ram": Suite(suite_dual_ram),
    "degrees": Suite(suite_degrees),
    "idempotents": Suite(suite_idempotents, 4),
    "tau": Suite(suite_tau, 4),
    "circ": Suite(suite_circ),
    "specialization": Suite(suite_specialization, 8),
    "classical": Suite(suite_classical),
    "cauchy": Suite(suite_cauchy, 4),
    "chv": Suite(suite_chv),
    "induce": Suite(suite_induce),
}


def selectors() -> list[str]:
    return ["all"] + list(SUITES)


def run_one(name: str, n: int) -> CheckResult:
    suite = SUITES[name]
    start = time.perf_counter()
    failures = suite.func(n)
    elapsed = time.perf_counter() - start
    payload = None
    if failures:
        shown = failures[:3]
        payload = " | ".join(f"{label}: {p}" if p else label for label, p in shown)
        if len(failures) > 3:
            payload += f" | ... ({len(failures)} failures)"
    return CheckResult(name, n, not failures, payload, elapsed)


def run(n: int, selector: str = "all") -> VerificationReport:
    """Run one suite (or all) in degree n."""
    if selector != "all" and selector not in SUITES:
        raise KeyError(selector)
    names = list(SUITES) if selector == "all" else [selector]
    report = VerificationReport()
    for name in names:
        bound = SUITES[name].max_n
        if bound is not None and n > bound:
            report.skipped.append((name, n))
            continue
        report.results.append(run_one(name, n))
    return report
