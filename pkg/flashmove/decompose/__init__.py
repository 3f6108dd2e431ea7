"""
Decomposition module for flashmove
Block-permutation sets via perfect matchings, and their semi-cycles
"""

from .models import BlockPermutationSet, SemiCycle
from .tools import (
    perfect_matching,
    is_perfect_matching,
    matching_decomposition,
    block_permutation_sets,
    semi_cycles,
    is_block_permutation_set,
    is_partition
)

__all__ = [
    "BlockPermutationSet",
    "SemiCycle",
    "perfect_matching",
    "is_perfect_matching",
    "matching_decomposition",
    "block_permutation_sets",
    "semi_cycles",
    "is_block_permutation_set",
    "is_partition"
]
