"""Finite right-residuated l-groupoids, sectioned lattices and basic algebras."""

from .basic import BasicAlgebra, ImplicationReduct, a_of_g, a_of_l, b_of_reduct, g_of_a, l_of_a, mv_chain
from .errors import AlgebraError
from .lattice import FiniteLattice, Involution, build_lattice, canonical_form, lattice_from_leq
from .residuation import RRLGroupoid, check_biconditionals, classify, validate_rrl
from .sections import SectionedLattice, g_of_l, g_of_l_involutive, l_of_g, l_of_g_involutive

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BasicAlgebra",
    "FiniteLattice",
    "ImplicationReduct",
    "Involution",
    "RRLGroupoid",
    "SectionedLattice",
    "a_of_g",
    "a_of_l",
    "b_of_reduct",
    "build_lattice",
    "canonical_form",
    "check_biconditionals",
    "classify",
    "g_of_a",
    "g_of_l",
    "g_of_l_involutive",
    "l_of_a",
    "l_of_g",
    "l_of_g_involutive",
    "lattice_from_leq",
    "mv_chain",
    "validate_rrl",
]
