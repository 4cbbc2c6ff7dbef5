"""
heckez: exact computations in the centers of the Iwahori-Hecke algebras of
type A, the Frobenius map onto symmetric functions over Q(v), and the
v-characteristic map on characters.
"""

from .center import (
    CentralElement, circ, class_polynomials, decompose_central,
    gr_basis_element, gr_element, norm_F, norm_one, norm_tsq, relative_norm,
)
from .charmap import (
    CharacterTable, VirtualCharacter, ch_v, character_table,
    central_idempotent, generic_degree, induce, irreducible, psi, psi_inv,
    schur_element, theta,
)
from .hecke import HeckeElement, basis, he_mul, tau
from .ratfun import RatFun
from .symfunc import SymFun, basis_element, m_bar, sf_mul

__all__ = [
    "CentralElement", "circ", "class_polynomials", "decompose_central",
    "gr_basis_element", "gr_element", "norm_F", "norm_one", "norm_tsq",
    "relative_norm", "CharacterTable", "VirtualCharacter", "ch_v",
    "character_table", "central_idempotent", "generic_degree", "induce",
    "irreducible", "psi", "psi_inv", "schur_element", "theta", "HeckeElement",
    "basis", "he_mul", "tau", "RatFun", "SymFun", "basis_element", "m_bar",
    "sf_mul",
]

__version__ = "0.1.0"
