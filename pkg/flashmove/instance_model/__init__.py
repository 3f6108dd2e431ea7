"""
Instance module for flashmove
Data-movement instances: validation, generation, serialization, transition graphs
"""

from .models import MoveSpec, TransitionGraph, ValidationReport
from .tools import (
    validate,
    random_instance,
    all_pairs_instance,
    transition_graph,
    parse,
    serialize,
    load_example,
    EXAMPLES
)

__all__ = [
    "MoveSpec",
    "TransitionGraph",
    "ValidationReport",
    "validate",
    "random_instance",
    "all_pairs_instance",
    "transition_graph",
    "parse",
    "serialize",
    "load_example",
    "EXAMPLES"
]
