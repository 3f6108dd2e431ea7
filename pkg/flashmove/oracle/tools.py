# flashmove/oracle/tools.py
import logging
from collections import deque
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..config.settings import Settings
from ..errors import BudgetError, PreconditionError
from ..flash_sim.models import Erase, Plan, TraceEvent, Write
from ..instance_model.models import MoveSpec
from ..instance_model.tools import block_edges
from ..labelling.models import UndirectedGraph
from ..labelling.tools import min_y_exact

logger = logging.getLogger(__name__)

BRUTEFORCE_LIMIT = 9
MIS_LIMIT = 20
UNCODED_PAGE_LIMIT = 6
UNCODED_ERASURE_LIMIT = 10

EMPTY = -1

# Minimum-erasure counts assume the symbol field has at least n distinct
# nonzero elements, which GF(2^8) and GF(2^16) provide for every supported n.
WIDE_FIELD_ASSUMPTION = "symbol field has at least n distinct nonzero elements"


def _violating_labels(edges: set, ordering: Sequence[int]) -> Iterator[int]:
    n = len(ordering)
    for i in range(1, n - 1):
        for j in range(i + 2, n + 1):
            if (ordering[j - 1], ordering[i - 1]) in edges:
                yield i
                break


def min_y_bruteforce(spec: MoveSpec, limit: int = BRUTEFORCE_LIMIT) -> int:
    """Minimum labelling parameter over all n! orderings"""
    if spec.n > limit:
        raise BudgetError(f"Factorial labelling search is limited to n <= {limit} (n={spec.n})")
    edges = set(block_edges(spec))
    best = max(0, spec.n - 2)
    for ordering in permutations(range(1, spec.n + 1)):
        y = max(_violating_labels(edges, ordering), default=0)
        if y < best:
            best = y
            if best == 0:
                break
    return best


def min_erasures(spec: MoveSpec, settings: Optional[Settings] = None) -> int:
    """
    Fewest erasures of any movement solution, n + y_min + 1.

    y_min comes from the factorial search when n is small enough, otherwise
    from the exact subset labelling.
    """
    settings = settings or Settings()
    if spec.n <= BRUTEFORCE_LIMIT:
        y_min = min_y_bruteforce(spec)
    else:
        y_min = min_y_exact(spec, limit=settings.exact_limit).y
    return spec.n + y_min + 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def mis_bruteforce(g: UndirectedGraph, limit: int = MIS_LIMIT) -> int:
    """Maximum independent set size by branch and bound over vertex bitmasks"""
    if g.vertices > limit:
        raise BudgetError(f"Independent set search is limited to {limit} vertices ({g.vertices} given)")
    adjacency = [0] * g.vertices
    for u, v in g.edges:
        adjacency[u - 1] |= 1 << (v - 1)
        adjacency[v - 1] |= 1 << (u - 1)

    best = 0

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if candidates == 0:
            best = max(best, size)
            return
        if size + _popcount(candidates) <= best:
            return
        bit = candidates & -candidates
        v = bit.bit_length() - 1
        search(candidates & ~bit & ~adjacency[v], size + 1)
        search(candidates & ~bit, size)

    search((1 << g.vertices) - 1, 0)
    return best


# Uncoded search. A state is one tuple of page contents per block, indexed by
# block id (0 = B_0, 1..n data, n + 1 = B_0'); EMPTY marks an empty page.
State = Tuple[Tuple[int, ...], ...]


def _key(state: State, aux_ids: Sequence[int]) -> State:
    """Auxiliary blocks are interchangeable, and so are their pages"""
    aux = sorted(tuple(sorted(state[b])) for b in aux_ids)
    data = [block for b, block in enumerate(state) if b not in aux_ids]
    return tuple(data + aux)


def _successors(state: State, aux_ids: Sequence[int]) -> Iterator[Tuple[TraceEvent, State, int]]:
    """(event, next state, cost) for every copy and every loss-free erase"""
    copies: Dict[int, int] = {}
    for block in state:
        for datum in block:
            if datum != EMPTY:
                copies[datum] = copies.get(datum, 0) + 1

    for b, block in enumerate(state):
        if EMPTY not in block:
            continue
        pages = [block.index(EMPTY)] if b in aux_ids else [p for p, d in enumerate(block) if d == EMPTY]
        for datum in sorted(copies):
            if datum in block:
                continue
            for p in pages:
                updated = list(state)
                updated[b] = block[:p] + (datum,) + block[p + 1:]
                yield Write(b, p + 1, (datum,)), tuple(updated), 0

    for b, block in enumerate(state):
        stored = [d for d in block if d != EMPTY]
        if not stored:
            continue
        if any(copies[d] == stored.count(d) for d in stored):
            continue
        updated = list(state)
        updated[b] = (EMPTY,) * len(block)
        yield Erase(b), tuple(updated), 1


def uncoded_search(spec: MoveSpec, aux_blocks: int, max_erasures: int) -> Optional[Plan]:
    """
    Fewest-erasure uncoded plan within max_erasures, by 0-1 breadth-first search.

    Writes copy a stored datum verbatim into an empty page at no cost; an erase
    costs one and is only allowed when every datum in the block survives
    elsewhere. The goal is the target placement with every auxiliary block
    empty.

    Returns:
        A replayable Plan, or None when no plan exists within the budget
    """
    if spec.size > UNCODED_PAGE_LIMIT or max_erasures > UNCODED_ERASURE_LIMIT:
        raise BudgetError(
            f"Uncoded search is limited to nm <= {UNCODED_PAGE_LIMIT} and "
            f"max_erasures <= {UNCODED_ERASURE_LIMIT} (nm={spec.size}, max_erasures={max_erasures})"
        )
    if aux_blocks not in (1, 2):
        raise PreconditionError(f"Uncoded search supports one or two auxiliary blocks, not {aux_blocks}")

    n, m = spec.n, spec.m
    aux_ids = [0] + ([n + 1] if aux_blocks == 2 else [])
    empty = (EMPTY,) * m

    blocks: List[Tuple[int, ...]] = [empty]
    goal_blocks: List[Tuple[int, ...]] = [empty]
    for i in range(1, n + 1):
        blocks.append(tuple(spec.datum_index(i, j) for j in range(1, m + 1)))
        goal_blocks.append(tuple(spec.datum_index(*spec.source_of(i, j)) for j in range(1, m + 1)))
    if aux_blocks == 2:
        blocks.append(empty)
        goal_blocks.append(empty)
    start: State = tuple(blocks)
    goal = _key(tuple(goal_blocks), aux_ids)

    start_key = _key(start, aux_ids)
    cost: Dict[State, int] = {start_key: 0}
    parent: Dict[State, Optional[State]] = {start_key: None}
    frontier = deque([(0, start)])
    found = None
    while frontier:
        spent, state = frontier.popleft()
        key = _key(state, aux_ids)
        if cost[key] < spent:
            continue
        if key == goal:
            found = key
            break
        for _, successor, step in _successors(state, aux_ids):
            total = spent + step
            if total > max_erasures:
                continue
            successor_key = _key(successor, aux_ids)
            if successor_key in cost and cost[successor_key] <= total:
                continue
            cost[successor_key] = total
            parent[successor_key] = key
            if step == 0:
                frontier.appendleft((total, successor))
            else:
                frontier.append((total, successor))

    logger.debug("uncoded search explored %d states (aux=%d, budget=%d)", len(cost), aux_blocks, max_erasures)
    if found is None:
        return None

    path = []
    key = found
    while key is not None:
        path.append(key)
        key = parent[key]
    path.reverse()
    return _replay_path(spec, start, path, aux_ids, aux_blocks)


def _replay_path(spec: MoveSpec, start: State, path: List[State], aux_ids: Sequence[int], aux_blocks: int) -> Plan:
    """Turn a chain of canonical states back into concrete events"""
    plan = Plan(spec.n, spec.m, aux_blocks=aux_blocks, algorithm="uncoded")
    state = start
    for next_key in path[1:]:
        for event, successor, _ in _successors(state, aux_ids):
            if _key(successor, aux_ids) == next_key:
                break
        else:  # pragma: no cover - every recorded edge came from _successors
            raise PreconditionError("Uncoded witness could not be replayed")
        if isinstance(event, Write):
            coeffs = [0] * spec.size
            coeffs[event.coeffs[0]] = 1
            plan.write(event.block, event.page, coeffs)
        else:
            plan.erase(event.block)
        state = successor
    return plan


def uncoded_feasible(spec: MoveSpec, aux_blocks: int, max_erasures: int) -> bool:
    """Whether some uncoded plan with aux_blocks auxiliaries needs at most max_erasures erasures"""
    return uncoded_search(spec, aux_blocks, max_erasures) is not None
