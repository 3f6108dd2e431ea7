# flashmove/labelling/reduction.py
import json
import logging
from collections import Counter
from typing import Dict, List, Tuple

from ..errors import InstanceError, ParseError
from ..instance_model.models import MoveSpec, Page
from .models import UndirectedGraph

logger = logging.getLogger(__name__)


def _copies(g: UndirectedGraph, v: int) -> Tuple[int, int, int]:
    """Blocks standing for vertex v: v_1 = v, v_2 = |V| + v, v_3 = 2|V| + v"""
    return v, g.vertices + v, 2 * g.vertices + v


def reduction_edges(g: UndirectedGraph) -> Counter:
    """
    Directed multigraph of the reduction, as (source, target) -> multiplicity.

    Each undirected edge {u, v} becomes opposite edges between every copy of u
    and every copy of v; each vertex links v_1 <-> v_2 <-> v_3; loops pad every
    block to in/out degree 3 * max_degree + 2.
    """
    edges: Counter = Counter()
    for u, v in g.sorted_edges():
        for a in _copies(g, u):
            for b in _copies(g, v):
                edges[(a, b)] += 1
                edges[(b, a)] += 1
    for v in range(1, g.vertices + 1):
        v1, v2, v3 = _copies(g, v)
        for a, b in ((v1, v2), (v2, v3)):
            edges[(a, b)] += 1
            edges[(b, a)] += 1

    degree = 3 * g.max_degree + 2
    for block in range(1, 3 * g.vertices + 1):
        out_degree = sum(count for (a, _), count in edges.items() if a == block)
        if out_degree < degree:
            edges[(block, block)] += degree - out_degree
    return edges


def reduce_independent_set(g: UndirectedGraph) -> MoveSpec:
    """
    Build the data-movement instance whose transition graph is the reduction
    multigraph of g; n = 3|V| blocks of m = 3 * max_degree + 2 pages.

    Outgoing edges of a block, sorted by target, become its pages 1..m; the
    pages of a receiving block are handed out in (source block, source page)
    order.
    """
    if not g.edges:
        raise InstanceError("The reduction needs a graph with at least one edge")
    n = 3 * g.vertices
    m = 3 * g.max_degree + 2
    edges = reduction_edges(g)

    outgoing: Dict[int, List[int]] = {block: [] for block in range(1, n + 1)}
    for (a, b), count in sorted(edges.items()):
        outgoing[a].extend([b] * count)

    arrivals: Dict[int, List[Page]] = {block: [] for block in range(1, n + 1)}
    for block in range(1, n + 1):
        for page, target in enumerate(outgoing[block], start=1):
            arrivals[target].append((block, page))

    moves: Dict[Page, Page] = {}
    for target, sources in arrivals.items():
        for slot, source in enumerate(sorted(sources), start=1):
            moves[source] = (target, slot)

    logger.debug("Reduced graph with %d vertices to n=%d, m=%d", g.vertices, n, m)
    return MoveSpec.from_moves(n, m, moves)


def parse_graph(text: str) -> UndirectedGraph:
    """Decode {"vertices": int, "edges": [[u, v], ...]} with 1-based vertices"""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", line=e.lineno) from e
    if not isinstance(document, dict):
        raise ParseError("graph document must be a JSON object")

    vertices = document.get("vertices")
    if isinstance(vertices, bool) or not isinstance(vertices, int):
        raise ParseError("expected an integer vertex count", field="vertices")
    edges = document.get("edges")
    if not isinstance(edges, list):
        raise ParseError("expected a list of edges", field="edges")
    for index, edge in enumerate(edges):
        if not isinstance(edge, list) or len(edge) != 2 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in edge
        ):
            raise ParseError("each edge must be [u, v]", field=f"edges[{index}]")

    try:
        return UndirectedGraph.from_edges(vertices, edges)
    except InstanceError as e:
        raise ParseError(str(e), field="edges") from e


def serialize_graph(g: UndirectedGraph) -> str:
    return json.dumps({"vertices": g.vertices, "edges": [list(edge) for edge in g.sorted_edges()]}) + "\n"
