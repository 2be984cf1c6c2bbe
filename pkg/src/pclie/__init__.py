"""Partially commutative Lie algebras over a commutation graph."""

from .graph import CommutationGraph, clique_counts, parse_graph
from .gsb import (
    RelationSet,
    check_gsb,
    enumerate_basis,
    equal_in_pc,
    find_compositions,
    generate_s,
    is_s_reduced,
    nilpotent_basis,
    normal_form,
)
from .lie import LiePolynomial, bracket, d_decompose, derive, expand, leading_monomial, special_bracket
from .words import Alphabet, bracket_canonical, compare, enumerate_alsw, is_alsw, is_nlsw

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CommutationGraph",
    "LiePolynomial",
    "RelationSet",
    "bracket",
    "bracket_canonical",
    "check_gsb",
    "clique_counts",
    "compare",
    "d_decompose",
    "derive",
    "enumerate_alsw",
    "enumerate_basis",
    "equal_in_pc",
    "expand",
    "find_compositions",
    "generate_s",
    "is_alsw",
    "is_nlsw",
    "is_s_reduced",
    "leading_monomial",
    "nilpotent_basis",
    "normal_form",
    "parse_graph",
    "special_bracket",
]
