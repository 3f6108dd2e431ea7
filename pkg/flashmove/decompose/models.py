# flashmove/decompose/models.py
from dataclasses import dataclass
from typing import List, Tuple

from ..instance_model.models import MoveSpec, Page


@dataclass(frozen=True)
class BlockPermutationSet:
    """One page per block, pages[i-1] = j_i, whose alpha-images cover every block once"""
    pages: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.pages)

    def page(self, block: int) -> int:
        return self.pages[block - 1]

    def members(self) -> List[Page]:
        return [(i, j) for i, j in enumerate(self.pages, start=1)]

    def targets(self, spec: MoveSpec) -> Tuple[int, ...]:
        """Destination block of each member, indexed by source block"""
        return tuple(spec.alpha(i, j) for i, j in self.members())


@dataclass(frozen=True)
class SemiCycle:
    """
    Cyclic orbit of blocks within one block-permutation set.

    alpha(blocks[k], pages[k]) == blocks[(k + 1) % len]; the first block is the
    smallest member.
    """
    blocks: Tuple[int, ...]
    pages: Tuple[int, ...]

    @property
    def tail(self) -> int:
        return max(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def members(self) -> List[Page]:
        return list(zip(self.blocks, self.pages))
