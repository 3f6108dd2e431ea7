# flashmove/decompose/tools.py
import logging
from collections import deque
from typing import Deque, Dict, List, Mapping, Set

from ..errors import ContractViolation
from ..instance_model.models import MoveSpec, TransitionGraph
from ..instance_model.tools import transition_graph
from .models import BlockPermutationSet, SemiCycle

logger = logging.getLogger(__name__)


def is_perfect_matching(graph: TransitionGraph, matching: Mapping[int, int]) -> bool:
    """Every block appears once as a source and once as a target, over existing edges"""
    blocks = set(range(1, graph.n + 1))
    if set(matching.keys()) != blocks or set(matching.values()) != blocks:
        return False
    return all(graph.e(i, k) > 0 for i, k in matching.items())


def perfect_matching(graph: TransitionGraph) -> Dict[int, int]:
    """
    Find a perfect matching of the bipartite view of a regular transition multigraph.

    Augmenting-path search (Ford-Fulkerson on unit capacities); blocks and
    targets are scanned in ascending order, so the result is deterministic.

    Args:
        graph: d-regular multigraph, d >= 1

    Returns:
        Mapping source block -> target block using one edge per block
    """
    degree = graph.regular_degree()
    if not degree:
        raise ContractViolation("perfect_matching needs a d-regular multigraph with d >= 1")

    adjacency = [
        [k for k in range(1, graph.n + 1) if graph.e(i, k) > 0]
        for i in range(1, graph.n + 1)
    ]
    matched_source: Dict[int, int] = {}

    def augment(i: int, visited: Set[int]) -> bool:
        for k in adjacency[i - 1]:
            if k in visited:
                continue
            visited.add(k)
            if k not in matched_source or augment(matched_source[k], visited):
                matched_source[k] = i
                return True
        return False

    for i in range(1, graph.n + 1):
        if not augment(i, set()):
            # Hall's condition holds for regular bipartite multigraphs
            raise ContractViolation(f"No augmenting path for block B_{i}")

    return {i: k for k, i in sorted(matched_source.items(), key=lambda item: item[1])}


def matching_decomposition(graph: TransitionGraph) -> List[Dict[int, int]]:
    """Split a d-regular multigraph into d perfect matchings"""
    degree = graph.regular_degree()
    if not degree:
        raise ContractViolation("matching_decomposition needs a d-regular multigraph with d >= 1")
    matchings = []
    remaining = graph
    for _ in range(degree):
        matching = perfect_matching(remaining)
        matchings.append(matching)
        remaining = remaining.without(matching)
    return matchings


def block_permutation_sets(spec: MoveSpec) -> List[BlockPermutationSet]:
    """
    Partition the nm pages into m block-permutation sets.

    Each perfect matching picks, for block i, the lowest-numbered unused page
    moving along the matched edge.
    """
    pools: List[Dict[int, Deque[int]]] = [dict() for _ in range(spec.n)]
    for i, j in spec.pages():
        pools[i - 1].setdefault(spec.alpha(i, j), deque()).append(j)

    sets = []
    for matching in matching_decomposition(transition_graph(spec)):
        pages = tuple(pools[i - 1][matching[i]].popleft() for i in range(1, spec.n + 1))
        sets.append(BlockPermutationSet(pages))

    logger.debug("Decomposed n=%d, m=%d into %d block-permutation sets", spec.n, spec.m, len(sets))
    return sets


def semi_cycles(bps: BlockPermutationSet, spec: MoveSpec) -> List[SemiCycle]:
    """Cycles of the set's block permutation, ordered by their smallest block"""
    targets = bps.targets(spec)
    visited = [False] * (spec.n + 1)
    cycles = []
    for start in range(1, spec.n + 1):
        if visited[start]:
            continue
        blocks = []
        block = start
        while not visited[block]:
            visited[block] = True
            blocks.append(block)
            block = targets[block - 1]
        cycles.append(SemiCycle(tuple(blocks), tuple(bps.page(b) for b in blocks)))
    return cycles


def is_block_permutation_set(bps: BlockPermutationSet, spec: MoveSpec) -> bool:
    if bps.n != spec.n or not all(1 <= j <= spec.m for j in bps.pages):
        return False
    return sorted(bps.targets(spec)) == list(range(1, spec.n + 1))


def is_partition(sets: List[BlockPermutationSet], spec: MoveSpec) -> bool:
    """The sets are valid block-permutation sets covering each page exactly once"""
    if len(sets) != spec.m or not all(is_block_permutation_set(s, spec) for s in sets):
        return False
    covered = [page for s in sets for page in s.members()]
    return sorted(covered) == sorted(spec.pages())
