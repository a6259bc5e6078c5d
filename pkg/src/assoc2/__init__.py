"""Coderivations on the tensor coalgebra of the odd plane 0|2, their Hochschild
cohomology, and the moduli of 2-dimensional associative algebras."""
from .coderivation import Coderivation, bracket, compose, phi, psi
from .hochschild import cohomology, cohomology_dims, coboundary
from .moduli import AlgebraClass, MultiplicationTable, classify, standard_codifferential
from .syntax import format_coderivation, parse_coderivation

__all__ = [
    "AlgebraClass",
    "Coderivation",
    "MultiplicationTable",
    "bracket",
    "classify",
    "coboundary",
    "cohomology",
    "cohomology_dims",
    "compose",
    "format_coderivation",
    "parse_coderivation",
    "phi",
    "psi",
    "standard_codifferential",
]
