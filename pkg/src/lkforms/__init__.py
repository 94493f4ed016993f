"""Exact Lawrence-Krammer and reduced Burau representations of braid groups."""

from __future__ import annotations

from .bifork import BiforkCoords, DualForkCoords, expand, multiply, realize
from .braid import BraidParseError, BraidWord, half_twist, index_bijection, permutation_braid
from .burau import BurauContext
from .finite_type import GroupRingElement, derivative_invariant, finite_type_check, sample_ideal
from .laurent import LaurentPoly, parse_poly
from .lk import LKContext, pairing_table_entry
from .matrix import CharPoly, LambdaMatrix, charpoly_equal_up_to_units

__all__ = [
    "BiforkCoords",
    "BraidParseError",
    "BraidWord",
    "BurauContext",
    "CharPoly",
    "DualForkCoords",
    "GroupRingElement",
    "LKContext",
    "LambdaMatrix",
    "LaurentPoly",
    "charpoly_equal_up_to_units",
    "derivative_invariant",
    "expand",
    "finite_type_check",
    "half_twist",
    "index_bijection",
    "multiply",
    "pairing_table_entry",
    "parse_poly",
    "permutation_braid",
    "realize",
    "sample_ideal",
]
