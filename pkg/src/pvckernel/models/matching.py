# Matching Models

from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from .graph import Edge, VertexId, edge_key


@dataclass(frozen=True)
class Matching:
    """Matching: archi a due a due disgiunti, in forma canonica."""

    edges: FrozenSet[Edge] = frozenset()

    @classmethod
    def from_pairs(cls, pairs) -> 'Matching':
        return cls(frozenset(edge_key(u, v) for u, v in pairs))

    @property
    def covered(self) -> FrozenSet[VertexId]:
        return frozenset(v for edge in self.edges for v in edge)

    def is_valid(self) -> bool:
        return len(self.covered) == 2 * len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class AdjacentMatching:
    """Matching adiacente a v; ogni coppia (a_i, b_i) ha a_i in N(v)."""

    center: VertexId
    matching: Matching
    oriented: Tuple[Tuple[VertexId, VertexId], ...] = field(default_factory=tuple)

    @property
    def covered(self) -> FrozenSet[VertexId]:
        return self.matching.covered

    def __len__(self) -> int:
        return len(self.matching)
