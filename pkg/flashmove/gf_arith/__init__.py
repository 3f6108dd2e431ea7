"""
Finite-field module for flashmove
GF(2^w) arithmetic and the linear algebra used by coded plans
"""

from .field import FieldContext, Symbol, get_field, peasant_multiply, is_irreducible
from .linalg import CoeffMatrix, Echelon, row_echelon, reduce_vector, solve, rank, matmul

__all__ = [
    "FieldContext",
    "Symbol",
    "get_field",
    "peasant_multiply",
    "is_irreducible",
    "CoeffMatrix",
    "Echelon",
    "row_echelon",
    "reduce_vector",
    "solve",
    "rank",
    "matmul"
]
