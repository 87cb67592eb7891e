# Forest, Request and Marking Models

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from ..exceptions import ParameterError
from .graph import Edge, Graph, VertexId, edge_key
from .packing import Packing


class DfsForest:
    """
    Foresta DFS di G \\ M: un albero per componente, radice di id minimo,
    figli visitati per id crescente.
    """

    def __init__(self):
        self.parent: Dict[VertexId, Optional[VertexId]] = {}
        self.depth: Dict[VertexId, int] = {}
        self.children: Dict[VertexId, List[VertexId]] = {}
        self.roots: List[VertexId] = []
        self.preorder: Dict[VertexId, int] = {}
        self.postorder: Dict[VertexId, int] = {}
        self._order: List[VertexId] = []
        self._size: Dict[VertexId, int] = {}

    @classmethod
    def build(cls, graph: Graph, excluded: Iterable[VertexId]) -> 'DfsForest':
        """Costruisce la foresta DFS del grafo privato dei vertici esclusi."""
        forest = cls()
        blocked = set(excluded)
        post_counter = 0

        for root in graph.vertices():
            if root in blocked or root in forest.parent:
                continue
            forest.roots.append(root)
            forest._enter(root, None)
            stack = [(root, iter(graph.neighbors(root)))]
            while stack:
                v, pending = stack[-1]
                advanced = False
                for w in pending:
                    if w in blocked or w in forest.parent:
                        continue
                    forest._enter(w, v)
                    stack.append((w, iter(graph.neighbors(w))))
                    advanced = True
                    break
                if not advanced:
                    stack.pop()
                    forest.postorder[v] = post_counter
                    post_counter += 1
                    forest._size[v] = 1 + sum(forest._size[c] for c in forest.children[v])
        return forest

    def _enter(self, v: VertexId, parent: Optional[VertexId]) -> None:
        self.parent[v] = parent
        self.depth[v] = 0 if parent is None else self.depth[parent] + 1
        self.children[v] = []
        if parent is not None:
            self.children[parent].append(v)
        self.preorder[v] = len(self._order)
        self._order.append(v)

    # Interrogazioni

    def vertices(self) -> List[VertexId]:
        return sorted(self.parent)

    def __contains__(self, v: VertexId) -> bool:
        return v in self.parent

    def __len__(self) -> int:
        return len(self.parent)

    def ancestors(self, v: VertexId) -> List[VertexId]:
        """anc(v): v stesso e i suoi antenati, dal basso verso la radice."""
        chain = []
        current: Optional[VertexId] = v
        while current is not None:
            chain.append(current)
            current = self.parent[current]
        return chain

    def subtree(self, v: VertexId) -> Set[VertexId]:
        """sub(v): vertici del sottoalbero radicato in v."""
        start = self.preorder[v]
        return set(self._order[start:start + self._size[v]])

    def is_ancestor(self, u: VertexId, v: VertexId) -> bool:
        """Vero se u e' antenato di v (o u == v)."""
        start = self.preorder[u]
        return start <= self.preorder[v] < start + self._size[u]

    def postorder_vertices(self) -> List[VertexId]:
        return sorted(self.parent, key=self.postorder.__getitem__)

    def max_depth(self) -> int:
        return max(self.depth.values(), default=0)

    def leaves_within(self, members: Set[VertexId]) -> List[VertexId]:
        """Foglie della sottoforesta indotta da un insieme chiuso per antenati."""
        return sorted(
            v for v in members
            if not any(c in members for c in self.children[v])
        )

    def tree_edges(self) -> Set[Edge]:
        return {edge_key(v, p) for v, p in self.parent.items() if p is not None}

    def non_back_edges(self, graph: Graph) -> List[Edge]:
        """Archi di G \\ M fuori dalla foresta che non uniscono antenato e discendente."""
        tree = self.tree_edges()
        offending = []
        for u, v in graph.edges():
            if u not in self.parent or v not in self.parent or (u, v) in tree:
                continue
            if not (self.is_ancestor(u, v) or self.is_ancestor(v, u)):
                offending.append((u, v))
        return offending

    def covering_root(self, component: Iterable[VertexId]) -> VertexId:
        """Per un insieme connesso C di G \\ M restituisce w in C con C contenuto in sub(w)."""
        members = set(component)
        top = min(members, key=lambda v: (self.depth[v], v))
        if not members <= self.subtree(top):
            raise ParameterError(f'vertex set {sorted(members)} is not covered by a single subtree')
        return top


@dataclass(frozen=True)
class Request:
    """Richiesta (f, l): cammino di lunghezza l con insieme di estremi f contenuto in M."""

    f: FrozenSet[VertexId]
    l: int

    @property
    def is_edge(self) -> bool:
        """Con |f| = 2 e l = 1 l'unico cammino e' l'arco f stesso."""
        return len(self.f) == 2 and self.l == 1

    def sort_key(self) -> Tuple:
        return (len(self.f), tuple(sorted(self.f)), self.l)


@dataclass(frozen=True)
class SubRequest:
    """Sotto-richiesta (g, j) ancorata a y in Y."""

    g: FrozenSet[VertexId]
    j: int
    anchor: VertexId

    @property
    def is_edge(self) -> bool:
        return len(self.g) == 2 and self.j == 1


@dataclass
class MarkSet:
    """Vertici e archi marcati; il kernel e' il sottografo da essi indotto."""

    vertices: Set[VertexId] = field(default_factory=set)
    edges: Set[Edge] = field(default_factory=set)

    def mark_path(self, sequence: Iterable[VertexId]) -> None:
        seq = list(sequence)
        self.vertices.update(seq)
        self.edges.update(edge_key(a, b) for a, b in zip(seq, seq[1:]))

    def mark_induced(self, graph: Graph, members: Iterable[VertexId]) -> None:
        chosen = set(members)
        self.vertices |= chosen
        for v in chosen:
            for w in graph.neighbor_set(v):
                if w in chosen:
                    self.edges.add(edge_key(v, w))

    def is_closed(self) -> bool:
        return all(u in self.vertices and v in self.vertices for u, v in self.edges)

    def is_within(self, graph: Graph) -> bool:
        return all(v in graph for v in self.vertices) and all(graph.has_edge(u, v) for u, v in self.edges)

    def counts(self) -> Dict[str, int]:
        return {'vertices': len(self.vertices), 'edges': len(self.edges)}


@dataclass
class RequestTable:
    """Insiemi Y_{f,l}, richieste risolte e l'unione Y delle non risolte."""

    y_map: Dict[Request, FrozenSet[VertexId]] = field(default_factory=dict)
    leaves: Dict[Request, List[VertexId]] = field(default_factory=dict)
    resolved: Set[Request] = field(default_factory=set)
    edge_requests: Set[Request] = field(default_factory=set)
    y_union: Set[VertexId] = field(default_factory=set)

    def requests(self) -> List[Request]:
        return sorted(self.y_map, key=Request.sort_key)


@dataclass
class MarkingContext:
    """Tutto cio' che la marcatura ha calcolato, riusato da test e statistiche."""

    packing: Packing
    forest: DfsForest
    table: RequestTable
    marks: MarkSet
    components: List[FrozenSet[VertexId]] = field(default_factory=list)
    phase_counts: Dict[str, Dict[str, int]] = field(default_factory=dict)
    counters: Dict[str, int] = field(default_factory=dict)
