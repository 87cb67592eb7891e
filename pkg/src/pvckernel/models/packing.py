# Packing Model

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional

from .graph import DPath, VertexId


@dataclass
class Packing:
    """Insieme di d-cammini a due a due disgiunti sui vertici."""

    d: int
    paths: List[DPath] = field(default_factory=list)

    @property
    def vertex_set(self) -> FrozenSet[VertexId]:
        """M: unione dei vertici dei cammini."""
        return frozenset(v for path in self.paths for v in path)

    def add(self, path: DPath) -> None:
        self.paths.append(path)

    def __len__(self) -> int:
        return len(self.paths)

    def is_consistent(self) -> bool:
        """Disgiunzione e |M| = d * |paths|."""
        return (
            all(len(path) == self.d for path in self.paths)
            and len(self.vertex_set) == self.d * len(self.paths)
        )


class PackingStatus(Enum):
    YES = 'yes'
    NO = 'no'
    PACKING = 'packing'


@dataclass(frozen=True)
class PackingOutcome:
    """Esito del packing greedy: risposta diretta oppure packing massimale con al piu' k cammini."""

    status: PackingStatus
    packing: Optional[Packing] = None

    @classmethod
    def yes(cls, packing: Optional[Packing] = None) -> 'PackingOutcome':
        return cls(PackingStatus.YES, packing)

    @classmethod
    def no(cls, packing: Optional[Packing] = None) -> 'PackingOutcome':
        return cls(PackingStatus.NO, packing)

    @classmethod
    def of(cls, packing: Packing) -> 'PackingOutcome':
        return cls(PackingStatus.PACKING, packing)

    @property
    def is_yes(self) -> bool:
        return self.status is PackingStatus.YES

    @property
    def is_no(self) -> bool:
        return self.status is PackingStatus.NO

    @property
    def is_packing(self) -> bool:
        return self.status is PackingStatus.PACKING
