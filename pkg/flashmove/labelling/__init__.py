from .models import Labelling, UndirectedGraph
from .reduction import parse_graph, reduce_independent_set, reduction_edges, serialize_graph
from .tools import block_inflow, is_canonical, labelling_parameter, min_y_exact, min_y_greedy

__all__ = [
    "Labelling",
    "UndirectedGraph",
    "block_inflow",
    "is_canonical",
    "labelling_parameter",
    "min_y_exact",
    "min_y_greedy",
    "reduce_independent_set",
    "reduction_edges",
    "parse_graph",
    "serialize_graph",
]
