# flashmove/labelling/tools.py
import logging
from typing import List, Optional, Sequence

import numpy as np

from ..config.settings import Settings
from ..errors import BudgetError, InstanceError
from ..instance_model.models import MoveSpec
from .models import Labelling

logger = logging.getLogger(__name__)


def block_inflow(spec: MoveSpec) -> List[int]:
    """
    In-neighbour bitmasks: bit u - 1 of inflow[v - 1] is set when some page of
    B_u must move into B_v (u != v).
    """
    inflow = [0] * spec.n
    for i, j in spec.pages():
        a = spec.alpha(i, j)
        if a != i:
            inflow[a - 1] |= 1 << (i - 1)
    return inflow


def _check_ordering(spec: MoveSpec, ordering: Sequence[int]) -> None:
    if sorted(ordering) != list(range(1, spec.n + 1)):
        raise InstanceError(f"Ordering {list(ordering)} is not a permutation of blocks 1..{spec.n}")


def is_canonical(spec: MoveSpec, ordering: Sequence[int], y: int) -> bool:
    """
    Direct scan of the canonical constraint: for labels i = y+1..n-2 and
    j = i+2..n no page moves from the label-j block into the label-i block.
    """
    _check_ordering(spec, ordering)
    inflow = block_inflow(spec)
    n = spec.n
    for i in range(y + 1, n - 1):
        receiver = inflow[ordering[i - 1] - 1]
        for j in range(i + 2, n + 1):
            if receiver >> (ordering[j - 1] - 1) & 1:
                return False
    return True


def labelling_parameter(spec: MoveSpec, ordering: Sequence[int]) -> int:
    """Smallest y in 0..n-2 at which ordering is canonical"""
    _check_ordering(spec, ordering)
    inflow = block_inflow(spec)
    n = spec.n
    y = 0
    for i in range(1, n - 1):
        receiver = inflow[ordering[i - 1] - 1]
        if any(receiver >> (ordering[j - 1] - 1) & 1 for j in range(i + 2, n + 1)):
            y = i
    return y


def _ordering_from_suffix(spec: MoveSpec, suffix: List[int]) -> Labelling:
    """Unused blocks take labels 1..y in ascending order, the suffix takes y+1..n"""
    used = set(suffix)
    ordering = tuple([b for b in range(1, spec.n + 1) if b not in used] + suffix)
    return Labelling(ordering, labelling_parameter(spec, ordering))


def _popcounts(size: int, n: int) -> np.ndarray:
    masks = np.arange(size, dtype=np.int64)
    counts = np.zeros(size, dtype=np.int64)
    for bit in range(n):
        counts += (masks >> bit) & 1
    return counts


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def min_y_exact(spec: MoveSpec, limit: Optional[int] = None) -> Labelling:
    """
    Minimum-y canonical labelling by dynamic programming over block subsets.

    first[S] is the bitmask of blocks that can open a legal suffix whose block
    set is S. Prepending v to a suffix (S, f) is legal when v receives no data
    from S without f. The longest legal suffix t gives y = n - t.

    Args:
        spec: the instance
        limit: largest n accepted; defaults to Settings().exact_limit

    Returns:
        Labelling whose ordering attains the minimum y
    """
    limit = Settings().exact_limit if limit is None else limit
    n = spec.n
    if n > limit:
        raise BudgetError(f"Exact labelling is limited to n <= {limit} (n={n}); use the greedy labelling")

    inflow = np.array(block_inflow(spec), dtype=np.int64)
    size = 1 << n
    first = np.zeros(size, dtype=np.int64)
    for v in range(n):
        first[1 << v] = 1 << v

    popcount = _popcounts(size, n)
    for layer in range(1, n):
        masks = np.nonzero((popcount == layer) & (first != 0))[0]
        if masks.size == 0:
            break
        heads = first[masks]
        for v in range(n):
            bit = 1 << v
            free = (masks & bit) == 0
            inter = inflow[v] & masks
            single = (inter & (inter - 1)) == 0
            legal = free & ((inter == 0) | (single & ((inter & heads) != 0)))
            first[masks[legal] | bit] |= bit

    reachable = np.nonzero(first)[0]
    best = int(popcount[reachable].max())
    mask = int(reachable[popcount[reachable] == best][0])

    # Walk the suffix front to back, recovering a legal successor at each step.
    head = _lowest_bit(int(first[mask]))
    suffix = [head + 1]
    while True:
        rest = mask & ~(1 << head)
        if rest == 0:
            break
        needed = int(inflow[head]) & rest
        options = int(first[rest]) if needed == 0 else needed & int(first[rest])
        head = _lowest_bit(options)
        suffix.append(head + 1)
        mask = rest

    labelling = _ordering_from_suffix(spec, suffix)
    logger.debug("min_y_exact: n=%d, longest legal suffix %d, y=%d", n, best, labelling.y)
    return labelling


def min_y_greedy(spec: MoveSpec) -> Labelling:
    """
    Greedy canonical labelling: build the suffix back to front, each time
    prepending the smallest block that receives nothing from the suffix apart
    from its current first block.
    """
    n = spec.n
    inflow = block_inflow(spec)
    suffix: List[int] = []
    members = 0
    while len(suffix) < n:
        exempt = 1 << (suffix[0] - 1) if suffix else 0
        covered = members & ~exempt
        choice = next(
            (v for v in range(1, n + 1) if not members >> (v - 1) & 1 and not inflow[v - 1] & covered),
            None,
        )
        if choice is None:
            break
        suffix.insert(0, choice)
        members |= 1 << (choice - 1)

    return _ordering_from_suffix(spec, suffix)
