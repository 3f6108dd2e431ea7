import pytest

from flashmove.errors import BudgetError, PreconditionError
from flashmove.flash_sim import Erase, execute
from flashmove.instance_model import all_pairs_instance, random_instance
from flashmove.labelling import UndirectedGraph, min_y_exact
from flashmove.oracle import (
    WIDE_FIELD_ASSUMPTION,
    min_erasures,
    min_y_bruteforce,
    mis_bruteforce,
    uncoded_feasible,
    uncoded_search,
)


@pytest.mark.parametrize(
    "vertices, edges, expected",
    [
        (2, [[1, 2]], 1),
        (3, [[1, 2], [2, 3], [1, 3]], 1),
        (5, [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]], 2),
        (4, [], 4),
        (6, [[1, 2], [3, 4], [5, 6]], 3),
    ],
)
def test_independent_sets(vertices, edges, expected):
    assert mis_bruteforce(UndirectedGraph.from_edges(vertices, edges)) == expected


def test_independent_set_search_is_bounded():
    with pytest.raises(BudgetError):
        mis_bruteforce(UndirectedGraph.from_edges(21, []))


def test_two_blocks_need_three_erasures(example2, swap):
    assert min_erasures(example2) == 3
    assert min_erasures(swap) == 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_all_pairs_instances_need_two_n_minus_one(n):
    assert min_erasures(all_pairs_instance(n)) == 2 * n - 1


@pytest.mark.parametrize("seed", range(15))
def test_minimum_lies_between_the_bounds(seed):
    spec = random_instance(2 + seed % 7, 1 + seed % 3, seed)
    count = min_erasures(spec)
    assert spec.n + 1 <= count <= 2 * spec.n - 1
    assert count == spec.n + min_y_exact(spec).y + 1


def test_factorial_search_is_bounded():
    with pytest.raises(BudgetError):
        min_y_bruteforce(random_instance(10, 1, seed=0))
    assert min_y_bruteforce(all_pairs_instance(3), limit=3) == 1


def test_assumption_is_named():
    assert "nonzero" in WIDE_FIELD_ASSUMPTION


def test_one_auxiliary_block_cannot_reorder_example2_uncoded(example2):
    assert not uncoded_feasible(example2, aux_blocks=1, max_erasures=8)


def test_two_auxiliary_blocks_reorder_example2_uncoded(example2):
    plan = uncoded_search(example2, aux_blocks=2, max_erasures=8)
    assert plan is not None
    assert plan.algorithm == "uncoded"
    assert plan.erasures <= 8
    assert execute(example2, plan).verdict.success


def test_swap_witness_replays(swap):
    plan = uncoded_search(swap, aux_blocks=1, max_erasures=3)
    assert plan is not None
    assert plan.erasures == 3
    result = execute(swap, plan)
    assert result.verdict.success
    assert result.erase_counts == [1, 1, 1]
    assert isinstance(plan.events[-1], Erase)


def test_feasibility_is_monotone_in_the_budget(swap):
    assert [uncoded_feasible(swap, 1, budget) for budget in range(6)] == [False] * 3 + [True] * 3
    assert [uncoded_feasible(swap, 2, budget) for budget in range(6)] == [False] * 3 + [True] * 3


def test_uncoded_search_guards(example1, swap):
    with pytest.raises(BudgetError):
        uncoded_search(example1, aux_blocks=1, max_erasures=4)
    with pytest.raises(BudgetError):
        uncoded_search(swap, aux_blocks=1, max_erasures=11)
    with pytest.raises(PreconditionError):
        uncoded_search(swap, aux_blocks=3, max_erasures=4)
