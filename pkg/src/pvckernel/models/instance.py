# Instance, Trace and Stats Models

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional

from .forest import MarkingContext
from .graph import Graph, VertexId
from .packing import Packing


class Verdict(Enum):
    YES = 'yes'
    NO = 'no'


@dataclass
class PvcInstance:
    """Istanza (G, d, k) di d-Path Vertex Cover."""

    graph: Graph
    d: int
    k: int
    verdict: Optional[Verdict] = None

    def copy(self) -> 'PvcInstance':
        return PvcInstance(graph=self.graph.copy(), d=self.d, k=self.k, verdict=self.verdict)

    @property
    def decided(self) -> bool:
        return self.verdict is not None


# Eventi della traccia di riduzione

@dataclass(frozen=True)
class ComponentRemoved:
    vertices: FrozenSet[VertexId]
    kind = 'component'


@dataclass(frozen=True)
class DegreeOneTwinDeleted:
    x: VertexId
    v: VertexId
    kind = 'degree_one'


@dataclass(frozen=True)
class HighDegreeVertexDeleted:
    v: VertexId
    matching_size: int
    kind = 'matching'


@dataclass(frozen=True)
class ExpansionEdgeDeleted:
    x: VertexId
    v: VertexId
    kind = 'expansion'


@dataclass(frozen=True)
class KDecremented:
    kind = 'k_decrement'


@dataclass
class ReductionTrace:
    """Sequenza ordinata degli eventi di riduzione."""

    events: List[object] = field(default_factory=list)

    def record(self, event) -> None:
        self.events.append(event)

    def firings(self) -> Dict[str, int]:
        """Numero di applicazioni per regola."""
        counts = Counter(event.kind for event in self.events if event.kind != 'k_decrement')
        return {kind: counts.get(kind, 0) for kind in ('component', 'degree_one', 'matching', 'expansion')}

    def replay(self, instance: PvcInstance) -> PvcInstance:
        """Riapplica la traccia a una copia dell'istanza originale."""
        result = instance.copy()
        for event in self.events:
            if isinstance(event, ComponentRemoved):
                for v in sorted(event.vertices):
                    result.graph.delete_vertex(v)
            elif isinstance(event, DegreeOneTwinDeleted):
                result.graph.delete_vertex(event.x)
            elif isinstance(event, HighDegreeVertexDeleted):
                result.graph.delete_vertex(event.v)
            elif isinstance(event, ExpansionEdgeDeleted):
                result.graph.delete_edge(event.x, event.v)
            elif isinstance(event, KDecremented):
                if result.k == 0:
                    result.verdict = Verdict.NO
                else:
                    result.k -= 1
        return result

    def __len__(self) -> int:
        return len(self.events)


@dataclass(frozen=True)
class XPartition:
    """Partizione di X = N(v) \\ M in X0, X1, X2 e l'insieme M1."""

    x0: FrozenSet[VertexId]
    x1: FrozenSet[VertexId]
    x2: FrozenSet[VertexId]
    m1: FrozenSet[VertexId]

    @property
    def x(self) -> FrozenSet[VertexId]:
        return self.x0 | self.x1 | self.x2


@dataclass
class KernelStats:
    """Record piatto con conteggi, bound e strumentazione di una kernelizzazione."""

    d: int
    k: int
    method: str
    n_in: int = 0
    m_in: int = 0
    n_out: int = 0
    m_out: int = 0
    k_out: int = 0
    decided: Optional[str] = None
    rule_firings: Dict[str, int] = field(default_factory=dict)
    bound: Optional[int] = None
    bound_satisfied: Optional[bool] = None
    max_degree: int = 0
    degree_bound: Optional[int] = None
    packing_size: int = 0
    marks: Dict[str, Dict[str, int]] = field(default_factory=dict)
    audit: Dict[str, object] = field(default_factory=dict)
    instrumentation: Dict[str, int] = field(default_factory=dict)


@dataclass
class KernelResult:
    """Istanza ridotta con traccia, statistiche e packing usato per l'audit."""

    instance: PvcInstance
    stats: KernelStats
    trace: ReductionTrace = field(default_factory=ReductionTrace)
    packing: Optional[Packing] = None
    marking: Optional[MarkingContext] = None

    @property
    def verdict(self) -> Optional[Verdict]:
        return self.instance.verdict
