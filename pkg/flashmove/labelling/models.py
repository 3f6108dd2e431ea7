# flashmove/labelling/models.py
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from ..errors import InstanceError


@dataclass(frozen=True)
class Labelling:
    """
    A relabelling of the n data blocks.

    ordering[l - 1] is the physical block carrying label l; y is the parameter
    at which the ordering is canonical.
    """
    ordering: Tuple[int, ...]
    y: int

    @property
    def n(self) -> int:
        return len(self.ordering)

    def block(self, label: int) -> int:
        return self.ordering[label - 1]

    def label_of(self, block: int) -> int:
        return self.ordering.index(block) + 1

    @property
    def erasures(self) -> int:
        """Erasures of a linear-coded plan run with this labelling"""
        return self.n + self.y + 1

    @classmethod
    def identity(cls, n: int, y: int) -> "Labelling":
        return cls(tuple(range(1, n + 1)), y)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph on vertices 1..vertices; edges stored as (u, v) with u < v"""
    vertices: int
    edges: FrozenSet[Tuple[int, int]]

    @classmethod
    def from_edges(cls, vertices: int, edges: Iterable[Iterable[int]]) -> "UndirectedGraph":
        if vertices < 1:
            raise InstanceError(f"A graph needs at least one vertex, got {vertices}")
        normalised = set()
        for edge in edges:
            u, v = (int(x) for x in edge)
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise InstanceError(f"Edge ({u}, {v}) leaves the vertex range 1..{vertices}")
            if u == v:
                raise InstanceError(f"Loop at vertex {u}; the graph must be simple")
            key = (min(u, v), max(u, v))
            if key in normalised:
                raise InstanceError(f"Edge {key} listed twice; the graph must be simple")
            normalised.add(key)
        return cls(vertices, frozenset(normalised))

    def neighbours(self, v: int) -> List[int]:
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    @property
    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(1, self.vertices + 1))

    def sorted_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.edges)
