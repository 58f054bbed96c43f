"""Exact Kazhdan-Lusztig combinatorics for the affine Weyl group of type A~2."""

from kla2.coxeter import Elt, from_word, theta_elt, x_elt
from kla2.hecke import HeckeElt, kl_basis
from kla2.laurent import LPoly

__all__ = ["Elt", "from_word", "theta_elt", "x_elt", "HeckeElt", "kl_basis", "LPoly"]
__version__ = "0.1.0"
