"""
Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run directly (`python tests/test_acceptance.py`) for the lines alone, or
through pytest, where they are collected into the terminal summary.
"""

from __future__ import annotations

import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

from heckez.verify import run_one

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []


def _report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _sweep(jobs) -> tuple[bool, float, list[str]]:
    """Run (suite, n) jobs; return overall status, elapsed time, failures."""
    start = time.perf_counter()
    failures = []
    for name, n in jobs:
        r = run_one(name, n)
        if not r.passed:
            failures.append(r.line())
    return not failures, time.perf_counter() - start, failures


def _check(number, title, jobs, budget=None):
    ok, elapsed, failures = _sweep(jobs)
    detail = f"{len(jobs)} suite runs, {elapsed:.1f}s"
    if budget is not None:
        detail += f", budget {budget:.0f}s"
        ok = ok and elapsed < budget
    _report(number, title, ok, detail)
    assert not failures, failures
    assert budget is None or elapsed < budget


def test_criterion_1_frobenius_images():
    _check(1, "psi on f*, e, N(1), N(T~^2), N(F) for n <= 5",
           [("five-bases", n) for n in range(0, 6)], budget=60)


def test_criterion_1_frobenius_images_n6():
    _check(1, "psi on the five bases, full sweep at n = 6",
           [("five-bases", 6)], budget=15 * 60)


def test_criterion_2_multiplicativity():
    _check(2, "psi(f*_mu o f*_lam) = psi(f*_mu) psi(f*_lam), |mu|+|lam| <= 6",
           [("psi-mult", n) for n in range(2, 7)])


def test_criterion_3_lascoux():
    _check(3, "N_alpha(1) against brute-force 0-1 matrix counts, n <= 5",
           [("lascoux", n) for n in range(0, 6)])


def test_criterion_4_transition_matrices():
    _check(4, "N1, NT2, NF transition matrices, n <= 5",
           [("transition", n) for n in range(0, 6)])


def test_criterion_5_two_path_characters():
    _check(5, "characters via h-bar vs traces on H e (n <= 4) and vs "
              "Murnaghan-Nakayama at v=1 (n <= 5)",
           [("characters-trace", n) for n in range(1, 5)]
           + [("characters", n) for n in range(0, 6)])


def test_criterion_6_structure():
    _check(6, "centrality, idempotents, tau symmetry, o commutative/associative",
           [("central", n) for n in range(0, 7)]
           + [("idempotents", n) for n in range(0, 5)]
           + [("tau", n) for n in range(1, 5)]
           + [("circ", n) for n in range(0, 7)])


def test_criterion_7_specialization():
    _check(7, "mbar at v=1 (n <= 8) and psi at v=1 (n <= 5)",
           [("specialization", n) for n in range(0, 9)]
           + [("classical", n) for n in range(0, 6)])


def test_criterion_8_characteristic_map():
    _check(8, "Cauchy identity (n <= 4), ch_v = s (n <= 5), induction (n <= 5), "
              "psi o theta = ch_v",
           [("cauchy", n) for n in range(1, 5)]
           + [("chv", n) for n in range(0, 6)]
           + [("induce", n) for n in range(2, 6)])


def _export(out: Path, cache: Path | None) -> dict[str, bytes]:
    env = dict(os.environ)
    env.pop("HECKEZ_CACHE_DIR", None)
    if cache is not None:
        env["HECKEZ_CACHE_DIR"] = str(cache)
    subprocess.run([sys.executable, "-m", "heckez", "export", "--n", "4", "--out", str(out)],
                   check=True, env=env, capture_output=True)
    return {p.name: p.read_bytes() for p in sorted(out.iterdir())}


def test_criterion_9_determinism():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        cache = tmp / "cache"
        cold = _export(tmp / "cold", cache)
        entries = sorted(p.name for p in cache.iterdir())
        warm = _export(tmp / "warm", cache)
        plain = _export(tmp / "plain", None)
    ok = bool(entries) and cold == warm == plain
    _report(9, "byte-identical exports: cold cache, warm cache, no cache", ok,
            f"{len(cold)} files, {len(entries)} cache entries")
    assert entries
    assert cold == warm == plain


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
