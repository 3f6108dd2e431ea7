# flashmove/planners/layout.py
from dataclasses import dataclass
from typing import List, Set, Tuple

from ..decompose.models import BlockPermutationSet, SemiCycle
from ..decompose.tools import block_permutation_sets, semi_cycles
from ..instance_model.models import MoveSpec


@dataclass(frozen=True)
class SetLayout:
    """
    Placement bookkeeping for one block-permutation set.

    Tuples are indexed by block - 1: source_page[i] is the set's page in B_i,
    destination[i] = sigma(i), origin[b] = sigma^-1(b) and slot[b] the page of
    B_b that finally receives the set's datum.
    """
    source_page: Tuple[int, ...]
    destination: Tuple[int, ...]
    origin: Tuple[int, ...]
    slot: Tuple[int, ...]
    cycles: Tuple[SemiCycle, ...]

    @property
    def tails(self) -> Set[int]:
        return {cycle.tail for cycle in self.cycles}


class MovementLayout:
    """
    Per-set view of an instance shared by every planner.

    Sets are numbered 1..m in decomposition order; set k owns page k of any
    auxiliary or scratch write.
    """

    def __init__(self, spec: MoveSpec):
        self.spec = spec
        self.sets: List[BlockPermutationSet] = block_permutation_sets(spec)
        self._layouts = [self._build(bps) for bps in self.sets]

    def _build(self, bps: BlockPermutationSet) -> SetLayout:
        spec = self.spec
        destination = bps.targets(spec)
        origin = [0] * spec.n
        slot = [0] * spec.n
        for i in range(1, spec.n + 1):
            b = destination[i - 1]
            origin[b - 1] = i
            slot[b - 1] = spec.beta(i, bps.page(i))
        return SetLayout(
            source_page=bps.pages,
            destination=destination,
            origin=tuple(origin),
            slot=tuple(slot),
            cycles=tuple(semi_cycles(bps, spec)),
        )

    def __len__(self) -> int:
        return len(self._layouts)

    def set_layout(self, k: int) -> SetLayout:
        return self._layouts[k - 1]

    def datum(self, k: int, block: int) -> int:
        """Coefficient coordinate of set k's original datum in block"""
        return self.spec.datum_index(block, self._layouts[k - 1].source_page[block - 1])

    def arriving(self, k: int, block: int) -> int:
        """Coordinate of the datum of set k that must end in block"""
        return self.datum(k, self._layouts[k - 1].origin[block - 1])

    def slot(self, k: int, block: int) -> int:
        return self._layouts[k - 1].slot[block - 1]

    def destination(self, k: int, block: int) -> int:
        return self._layouts[k - 1].destination[block - 1]

    def origin(self, k: int, block: int) -> int:
        return self._layouts[k - 1].origin[block - 1]

    def is_tail(self, k: int, block: int) -> bool:
        return block in self._layouts[k - 1].tails

    def coordinates(self, k: int) -> List[int]:
        """All datum coordinates belonging to set k"""
        return [self.datum(k, block) for block in range(1, self.spec.n + 1)]
