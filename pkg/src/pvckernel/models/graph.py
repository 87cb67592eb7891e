# Graph Model

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from ..exceptions import GraphError

VertexId = int
Edge = Tuple[VertexId, VertexId]


def edge_key(u: VertexId, v: VertexId) -> Edge:
    """Forma canonica di un arco non orientato: (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """
    Grafo semplice non orientato con identificativi stabili.

    Gli id sono interi non negativi assegnati in ordine crescente e mai
    riutilizzati dopo una cancellazione; l'iterazione su vertici e vicini
    avviene sempre per id crescente.
    """

    def __init__(self):
        self._adj: Dict[VertexId, Set[VertexId]] = {}
        self._next_id: VertexId = 0
        self._edge_count = 0

    # Costruzione

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]] = ()) -> 'Graph':
        """Crea un grafo con vertici 0..n-1 e gli archi indicati."""
        graph = cls()
        for _ in range(n):
            graph.add_vertex()
        for u, v in edges:
            graph.add_edge(u, v)
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> 'Graph':
        """Converte un grafo networkx con nodi interi non negativi."""
        graph = cls()
        nodes = sorted(nx_graph.nodes())
        if nodes:
            graph._next_id = nodes[-1] + 1
        for node in nodes:
            graph._adj[node] = set()
        for u, v in nx_graph.edges():
            if u != v:
                graph.add_edge(u, v)
        return graph

    def add_vertex(self) -> VertexId:
        """Aggiunge un vertice isolato e ne restituisce l'id."""
        vertex = self._next_id
        self._next_id += 1
        self._adj[vertex] = set()
        return vertex

    def add_edge(self, u: VertexId, v: VertexId) -> None:
        """Aggiunge l'arco {u, v}; idempotente."""
        if u == v:
            raise GraphError(f'self-loop requested on vertex {u}')
        self._require_vertex(u)
        self._require_vertex(v)
        if v in self._adj[u]:
            return
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1

    def delete_vertex(self, v: VertexId) -> None:
        """Rimuove v e tutti gli archi incidenti."""
        self._require_vertex(v)
        for u in self._adj[v]:
            self._adj[u].discard(v)
        self._edge_count -= len(self._adj[v])
        del self._adj[v]

    def delete_edge(self, u: VertexId, v: VertexId) -> None:
        """Rimuove l'arco {u, v}."""
        if not self.has_edge(u, v):
            raise GraphError(f'edge {{{u}, {v}}} is not present')
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1

    # Interrogazioni

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: VertexId) -> List[VertexId]:
        """Vicini di v in ordine crescente."""
        self._require_vertex(v)
        return sorted(self._adj[v])

    def neighbor_set(self, v: VertexId) -> Set[VertexId]:
        """Vista non ordinata dei vicini (da non modificare)."""
        self._require_vertex(v)
        return self._adj[v]

    def degree(self, v: VertexId) -> int:
        self._require_vertex(v)
        return len(self._adj[v])

    def vertices(self) -> List[VertexId]:
        return sorted(self._adj)

    def vertex_set(self) -> Set[VertexId]:
        return set(self._adj)

    def edges(self) -> List[Edge]:
        """Archi in forma canonica, ordinati."""
        return sorted(
            (u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v
        )

    def num_vertices(self) -> int:
        return len(self._adj)

    def num_edges(self) -> int:
        return self._edge_count

    @property
    def next_id(self) -> VertexId:
        return self._next_id

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def neighborhood(self, vertices: Iterable[VertexId]) -> Set[VertexId]:
        """N(X): vicini dei vertici di X esclusi quelli in X."""
        members = set(vertices)
        result: Set[VertexId] = set()
        for v in members:
            result |= self.neighbor_set(v)
        return result - members

    def __contains__(self, v: VertexId) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.vertices())

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f'<Graph n={self.num_vertices()} m={self.num_edges()}>'

    # Decomposizioni

    def connected_components(self) -> List[Set[VertexId]]:
        """Componenti connesse ordinate per id minimo."""
        seen: Set[VertexId] = set()
        components: List[Set[VertexId]] = []
        for start in self.vertices():
            if start in seen:
                continue
            component = {start}
            queue = deque([start])
            seen.add(start)
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        component.add(w)
                        queue.append(w)
            components.append(component)
        return components

    def induced_subgraph(self, vertices: Iterable[VertexId]) -> 'Graph':
        """G[X] con gli stessi id; il contatore degli id e' ereditato."""
        members = set(vertices)
        dead = [v for v in members if v not in self._adj]
        if dead:
            raise GraphError(f'vertex set contains dead ids {sorted(dead)}')
        sub = Graph()
        sub._next_id = self._next_id
        for v in members:
            sub._adj[v] = self._adj[v] & members
        sub._edge_count = sum(len(nbrs) for nbrs in sub._adj.values()) // 2
        return sub

    def without(self, vertices: Iterable[VertexId]) -> 'Graph':
        """G \\ S."""
        removed = set(vertices)
        return self.induced_subgraph(v for v in self._adj if v not in removed)

    def edge_subgraph(self, vertices: Iterable[VertexId], edges: Iterable[Edge]) -> 'Graph':
        """Sottografo (V', E') con E' ristretto agli archi presenti tra vertici di V'."""
        members = set(vertices)
        sub = self.induced_subgraph(members)
        kept = {edge_key(u, v) for u, v in edges}
        for u, v in sub.edges():
            if (u, v) not in kept:
                sub.delete_edge(u, v)
        return sub

    def copy(self) -> 'Graph':
        clone = Graph()
        clone._next_id = self._next_id
        clone._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        clone._edge_count = self._edge_count
        return clone

    def to_networkx(self) -> nx.Graph:
        """Copia networkx con nodi e archi inseriti per id crescente."""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices())
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def _require_vertex(self, v: VertexId) -> None:
        if v not in self._adj:
            raise GraphError(f'vertex {v} is not live')


@dataclass(frozen=True)
class DPath:
    """Cammino su d vertici distinti, in orientazione canonica (primo id < ultimo id)."""

    vertices: Tuple[VertexId, ...]

    def __post_init__(self):
        seq = tuple(self.vertices)
        if len(set(seq)) != len(seq):
            raise GraphError(f'path {seq} repeats a vertex')
        if len(seq) > 1 and seq[-1] < seq[0]:
            seq = seq[::-1]
        object.__setattr__(self, 'vertices', seq)

    @property
    def d(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> List[Edge]:
        return [edge_key(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def is_valid_in(self, graph: Graph) -> bool:
        """Vero se tutti i vertici sono vivi e i consecutivi adiacenti in graph."""
        if any(v not in graph for v in self.vertices):
            return False
        return all(graph.has_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


def validate_vertex_set(graph: Graph, vertices: Optional[Iterable[VertexId]]) -> Set[VertexId]:
    """Normalizza un insieme di vertici verificando che siano vivi."""
    members = set(vertices or ())
    dead = [v for v in members if v not in graph]
    if dead:
        raise GraphError(f'vertex set contains dead ids {sorted(dead)}')
    return members
