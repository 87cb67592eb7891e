# Models Package

from .decision import Decision
from .expansion import ExpansionCertificate
from .forest import DfsForest, MarkingContext, MarkSet, Request, RequestTable, SubRequest
from .graph import DPath, Edge, Graph, VertexId, edge_key, validate_vertex_set
from .instance import (
    ComponentRemoved,
    DegreeOneTwinDeleted,
    ExpansionEdgeDeleted,
    HighDegreeVertexDeleted,
    KDecremented,
    KernelResult,
    KernelStats,
    PvcInstance,
    ReductionTrace,
    Verdict,
    XPartition,
)
from .matching import AdjacentMatching, Matching
from .packing import Packing, PackingOutcome, PackingStatus
