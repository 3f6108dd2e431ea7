# flashmove/instance_model/models.py
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..errors import InstanceError

Page = Tuple[int, int]


@dataclass(frozen=True)
class MoveSpec:
    """
    A data-movement instance over n blocks of m pages.

    targets[i-1][j-1] = (alpha(i, j), beta(i, j)): the page whose data must end up
    holding D_{i,j}. Indices are 1-based, matching the serialized form.
    """
    n: int
    m: int
    targets: Tuple[Tuple[Page, ...], ...]

    @classmethod
    def from_moves(cls, n: int, m: int, moves: Mapping[Page, Page]) -> "MoveSpec":
        rows = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, m + 1):
                if (i, j) not in moves:
                    raise InstanceError(f"No target given for page p_{i},{j}")
                a, b = moves[(i, j)]
                row.append((int(a), int(b)))
            rows.append(tuple(row))
        return cls(n=n, m=m, targets=tuple(rows))

    @classmethod
    def from_block_permutation(cls, alpha: List[int]) -> "MoveSpec":
        """Single-page instance (m = 1) from the permutation alpha(1..n)"""
        return cls.from_moves(len(alpha), 1, {(i, 1): (a, 1) for i, a in enumerate(alpha, start=1)})

    @property
    def size(self) -> int:
        return self.n * self.m

    def alpha(self, i: int, j: int) -> int:
        return self.targets[i - 1][j - 1][0]

    def beta(self, i: int, j: int) -> int:
        return self.targets[i - 1][j - 1][1]

    def target(self, i: int, j: int) -> Page:
        return self.targets[i - 1][j - 1]

    def pages(self) -> Iterator[Page]:
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                yield (i, j)

    def datum_index(self, i: int, j: int) -> int:
        """Coordinate of D_{i,j} in nm-long coefficient vectors"""
        return (i - 1) * self.m + (j - 1)

    def moves(self) -> List[Tuple[int, int, int, int]]:
        return [(i, j, *self.target(i, j)) for i, j in self.pages()]

    @cached_property
    def sources(self) -> Dict[Page, Page]:
        """Inverse map: target page -> original page whose data it receives"""
        return {self.target(i, j): (i, j) for i, j in self.pages()}

    def source_of(self, a: int, b: int) -> Optional[Page]:
        return self.sources.get((a, b))


@dataclass(frozen=True)
class TransitionGraph:
    """Directed multigraph on blocks: multiplicity[i-1][k-1] pages move from B_i to B_k"""
    n: int
    multiplicity: Tuple[Tuple[int, ...], ...]

    def e(self, i: int, k: int) -> int:
        return self.multiplicity[i - 1][k - 1]

    def out_degree(self, i: int) -> int:
        return sum(self.multiplicity[i - 1])

    def in_degree(self, k: int) -> int:
        return sum(row[k - 1] for row in self.multiplicity)

    def regular_degree(self) -> Optional[int]:
        """The common in/out degree, or None if the multigraph is not regular"""
        degrees = {self.out_degree(v) for v in range(1, self.n + 1)}
        degrees |= {self.in_degree(v) for v in range(1, self.n + 1)}
        return degrees.pop() if len(degrees) == 1 else None

    def without(self, edges: Mapping[int, int]) -> "TransitionGraph":
        """Copy with one multi-edge i -> edges[i] removed per block"""
        rows = [list(row) for row in self.multiplicity]
        for i, k in edges.items():
            if rows[i - 1][k - 1] <= 0:
                raise InstanceError(f"No edge B_{i} -> B_{k} left to remove")
            rows[i - 1][k - 1] -= 1
        return TransitionGraph(self.n, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(); page names the first offending page when not ok"""
    ok: bool
    message: str = "ok"
    page: Optional[Page] = None
