import json
from itertools import combinations, permutations

import pytest

from flashmove.errors import BudgetError, InstanceError, ParseError
from flashmove.instance_model import all_pairs_instance, random_instance, transition_graph, validate
from flashmove.labelling import (
    Labelling,
    UndirectedGraph,
    block_inflow,
    is_canonical,
    labelling_parameter,
    min_y_exact,
    min_y_greedy,
    parse_graph,
    reduce_independent_set,
    reduction_edges,
    serialize_graph,
)
from flashmove.oracle import mis_bruteforce, min_y_bruteforce


def small_graphs():
    """Every graph on two to four vertices with at least one edge"""
    for vertices in range(2, 5):
        pairs = list(combinations(range(1, vertices + 1), 2))
        for count in range(1, len(pairs) + 1):
            for edges in combinations(pairs, count):
                yield UndirectedGraph.from_edges(vertices, edges)


def test_two_blocks_are_always_canonical(example2):
    labelling = min_y_exact(example2)
    assert labelling.y == 0
    assert labelling.erasures == 3
    assert min_y_greedy(example2).y == 0


def test_all_pairs_instance_has_the_largest_parameter():
    spec = all_pairs_instance(4)
    assert min_y_exact(spec).y == 2
    assert min_y_greedy(spec).y == 2
    for ordering in permutations(range(1, 5)):
        assert labelling_parameter(spec, ordering) == 2


def test_labelling_accessors():
    labelling = Labelling((3, 1, 2), 1)
    assert labelling.n == 3
    assert labelling.block(1) == 3
    assert labelling.label_of(2) == 3
    assert labelling.erasures == 5
    assert Labelling.identity(3, 0).ordering == (1, 2, 3)


def test_inflow_masks(example3):
    inflow = block_inflow(example3)
    # B_4 sends its page to B_1 and B_5 sends its page to B_2
    assert inflow[0] == 1 << 3
    assert inflow[1] == 1 << 4


@pytest.mark.parametrize("seed", range(12))
def test_parameter_is_the_smallest_canonical_y(seed):
    spec = random_instance(3 + seed % 5, 1 + seed % 2, seed)
    ordering = tuple(reversed(range(1, spec.n + 1)))
    y = labelling_parameter(spec, ordering)
    assert is_canonical(spec, ordering, y)
    assert all(not is_canonical(spec, ordering, smaller) for smaller in range(y))
    assert all(is_canonical(spec, ordering, larger) for larger in range(y, spec.n - 1))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_exact_labelling_matches_the_factorial_search(seed):
    spec = random_instance(2 + seed % 7, 1 + (seed // 7) % 4, seed)
    exact = min_y_exact(spec)
    assert sorted(exact.ordering) == list(range(1, spec.n + 1))
    assert exact.y == labelling_parameter(spec, exact.ordering)
    assert is_canonical(spec, exact.ordering, exact.y)
    assert exact.y == min_y_bruteforce(spec)

    greedy = min_y_greedy(spec)
    assert is_canonical(spec, greedy.ordering, greedy.y)
    assert greedy.y >= exact.y


def test_exact_labelling_respects_its_limit(example3):
    with pytest.raises(BudgetError):
        min_y_exact(example3, limit=3)


def test_orderings_must_be_permutations(example2):
    with pytest.raises(InstanceError):
        labelling_parameter(example2, (1, 1))
    with pytest.raises(InstanceError):
        is_canonical(example2, (1, 2, 3), 0)


def test_graph_construction_rules():
    graph = UndirectedGraph.from_edges(3, [[2, 1], [2, 3]])
    assert graph.sorted_edges() == [(1, 2), (2, 3)]
    assert graph.neighbours(2) == [1, 3]
    assert graph.max_degree == 2
    for vertices, edges in [(2, [[1, 1]]), (2, [[1, 2], [2, 1]]), (2, [[1, 3]]), (0, [])]:
        with pytest.raises(InstanceError):
            UndirectedGraph.from_edges(vertices, edges)


def test_graph_documents():
    graph = parse_graph('{"vertices": 3, "edges": [[1, 2], [3, 2]]}')
    assert json.loads(serialize_graph(graph)) == {"vertices": 3, "edges": [[1, 2], [2, 3]]}
    assert parse_graph(serialize_graph(graph)) == graph
    with pytest.raises(ParseError) as exc:
        parse_graph('{"vertices": 2, "edges": [[1, 1]]}')
    assert exc.value.field == "edges"
    with pytest.raises(ParseError) as exc:
        parse_graph('{"vertices": 2, "edges": [[1]]}')
    assert exc.value.field == "edges[0]"


def test_reduction_of_a_single_edge():
    graph = UndirectedGraph.from_edges(2, [[1, 2]])
    spec = reduce_independent_set(graph)
    assert (spec.n, spec.m) == (6, 5)
    assert validate(spec).ok
    assert transition_graph(spec).regular_degree() == 5
    assert sum(reduction_edges(graph).values()) == 30
    assert min_y_exact(spec).y == 3


def test_reduction_of_a_triangle():
    graph = UndirectedGraph.from_edges(3, [[1, 2], [2, 3], [1, 3]])
    spec = reduce_independent_set(graph)
    assert (spec.n, spec.m) == (9, 8)
    assert min_y_exact(spec).y == 6


def test_reduction_needs_an_edge():
    with pytest.raises(InstanceError):
        reduce_independent_set(UndirectedGraph.from_edges(3, []))


@pytest.mark.parametrize("graph", list(small_graphs()), ids=lambda g: f"{g.vertices}v{len(g.edges)}e")
def test_largest_legal_suffix_is_three_times_the_independent_set(graph):
    spec = reduce_independent_set(graph)
    assert validate(spec).ok
    assert spec.n - min_y_exact(spec).y == 3 * mis_bruteforce(graph)
