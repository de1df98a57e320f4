"""Diagram algebras and their Gelfand models by signed conjugation."""

from .algebra import AlgebraElement, conditional_expectation, multiply, p_t, rank_filter
from .diagrams import (
    Diagram,
    DiagramError,
    Family,
    canonicalize,
    compose,
    e_k,
    enumerate_family,
    fixed_blocks,
    format_diagram,
    identity,
    in_family,
    is_symmetric,
    parse_diagram,
    rank,
    transpose,
)
from .model import (
    ActionResult,
    RepMatrix,
    SymmetricBasis,
    act,
    enumerate_symmetric,
    find_conjugator,
    model_character,
    representation_matrix,
    sign_S,
)
from .scalars import Poly

__all__ = [
    "ActionResult",
    "AlgebraElement",
    "Diagram",
    "DiagramError",
    "Family",
    "Poly",
    "RepMatrix",
    "SymmetricBasis",
    "act",
    "canonicalize",
    "compose",
    "conditional_expectation",
    "e_k",
    "enumerate_family",
    "enumerate_symmetric",
    "find_conjugator",
    "fixed_blocks",
    "format_diagram",
    "identity",
    "in_family",
    "is_symmetric",
    "model_character",
    "multiply",
    "p_t",
    "parse_diagram",
    "rank",
    "rank_filter",
    "representation_matrix",
    "sign_S",
    "transpose",
]
