"""Print the Frobenius images of the five central bases of Z(H_n).

For each partition lam of n this shows psi(f*_lam), psi(e^lam), psi(N_lam(1)),
psi(N_lam(T~^2)) and psi(N_lam(F_lam)) in a chosen basis, so the closed forms
(mbar, s / kappa, and the contracted e, h, p) can be read off directly.

    python scripts/frobenius_table.py --n 3 --basis p
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from heckez.center import gr_basis_element, norm_F, norm_one, norm_tsq
from heckez.charmap import idempotent_coords, psi
from heckez.combinatorics import partitions_of, render_partition
from heckez.symfunc import BASES


@dataclass
class TableConfig:
    n: int = 3
    basis: str = "m"


FAMILIES = [
    ("f*", gr_basis_element),
    ("e", idempotent_coords),
    ("N(1)", norm_one),
    ("N(T~^2)", norm_tsq),
    ("N(F)", norm_F),
]


def main() -> None:
    p = argparse.ArgumentParser(description="Frobenius images of central bases")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--basis", choices=BASES, default="m")
    a = p.parse_args()
    cfg = TableConfig(a.n, a.basis)
    for lam in partitions_of(cfg.n):
        print(f"lambda = ({render_partition(lam)})")
        for name, make in FAMILIES:
            print(f"  psi({name}) = {psi(make(lam)).to(cfg.basis)}")


if __name__ == "__main__":
    main()
