"""Decide whether a polynomial ideal contains a monomial without Groebner bases."""

from .errors import (
    ContextError,
    ContractError,
    DegenerateInputError,
    MonoCheckError,
    ParseError,
    ResourceLimitError,
)
from .oracle import buchberger, groebner, ideal_contains_one, oracle_contains_monomial
from .parser import parse_ideal_file, print_ideal_file
from .polyring import MPoly, PolyRing, pseudo_div, reduce_set
from .solver import Options, contains_monomial, decide, is_solvable
from .systems import FactorList, SemiTriSystem, enumerate_solutions, is_triangular
from .triangulate import make_triangular

__all__ = [
    "ContextError",
    "ContractError",
    "DegenerateInputError",
    "FactorList",
    "MPoly",
    "MonoCheckError",
    "Options",
    "ParseError",
    "PolyRing",
    "ResourceLimitError",
    "SemiTriSystem",
    "buchberger",
    "contains_monomial",
    "decide",
    "enumerate_solutions",
    "groebner",
    "ideal_contains_one",
    "is_solvable",
    "is_triangular",
    "make_triangular",
    "oracle_contains_monomial",
    "parse_ideal_file",
    "print_ideal_file",
    "pseudo_div",
    "reduce_set",
]
