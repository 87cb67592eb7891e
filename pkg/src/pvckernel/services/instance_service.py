# Instance Services

import logging
from typing import Optional

import networkx as nx

from ..exceptions import ParameterError
from ..models.graph import Graph, VertexId

logger = logging.getLogger(__name__)


class InstanceService:
    """Generatori di istanze: grafi casuali, gadget strutturati e trasformazione VC -> d-PVC."""

    @staticmethod
    def random_instance(n: int, m: int, seed: int) -> Graph:
        """
        Grafo semplice uniforme con esattamente m archi su n vertici.

        Args:
            n: Numero di vertici
            m: Numero di archi
            seed: Seme del generatore

        Returns:
            Graph con vertici 0..n-1, identico per seed uguali

        Raises:
            ParameterError: Se m non e' realizzabile su n vertici
        """
        if n < 0:
            raise ParameterError(f'n={n} must be non-negative')
        max_edges = n * (n - 1) // 2
        if not 0 <= m <= max_edges:
            raise ParameterError(f'm={m} impossible on {n} vertices (at most {max_edges})')
        return Graph.from_networkx(nx.gnm_random_graph(n, m, seed=seed))

    # Gadget

    @staticmethod
    def path(n: int) -> Graph:
        """Cammino 0-1-...-(n-1)."""
        if n < 0:
            raise ParameterError(f'n={n} must be non-negative')
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def star(q: int) -> Graph:
        """q-stella: centro 0 e foglie 1..q."""
        if q < 0:
            raise ParameterError(f'q={q} must be non-negative')
        return Graph.from_edges(q + 1, [(0, i) for i in range(1, q + 1)])

    @staticmethod
    def triangle() -> Graph:
        return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])

    @staticmethod
    def di_star(p: int, q: int) -> Graph:
        """Centri adiacenti 0 e 1 con p e q foglie rispettivamente."""
        if p < 0 or q < 0:
            raise ParameterError(f'leaf counts p={p}, q={q} must be non-negative')
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(p)]
        edges += [(1, 2 + p + i) for i in range(q)]
        return Graph.from_edges(2 + p + q, edges)

    @staticmethod
    def star_with_triangle(q: int) -> Graph:
        """q-stella con le foglie 1 e 2 collegate."""
        if q < 2:
            raise ParameterError(f'q={q} must be at least 2 to close a triangle')
        graph = InstanceService.star(q)
        graph.add_edge(1, 2)
        return graph

    @staticmethod
    def pendant_matching_gadget(count: int, base: Optional[Graph] = None, v: VertexId = 0) -> Graph:
        """
        Aggiunge a v count coppie a_i - b_i con v - a_i: un matching adiacente a v di dimensione count.

        Args:
            count: Numero di coppie
            base: Grafo a cui attaccare il gadget (default: il solo vertice 0)
            v: Vertice centro

        Returns:
            Nuovo grafo; base non viene modificato
        """
        if count < 0:
            raise ParameterError(f'count={count} must be non-negative')
        graph = base.copy() if base is not None else Graph.from_edges(1)
        if v not in graph:
            raise ParameterError(f'center {v} is not a vertex of the base graph')
        for _ in range(count):
            a = graph.add_vertex()
            b = graph.add_vertex()
            graph.add_edge(v, a)
            graph.add_edge(a, b)
        return graph

    # Trasformazione

    @staticmethod
    def vc_to_dpvc(graph: Graph, d: int) -> Graph:
        """
        Riduzione da Vertex Cover a d-PVC: ogni vertice riceve un (d-2)-cammino pendente privato.

        Args:
            graph: Istanza di Vertex Cover
            d: Parametro d >= 3

        Returns:
            Grafo con |V| + |V|(d-2) vertici; k resta invariato

        Raises:
            ParameterError: Se d < 3
        """
        if d < 3:
            raise ParameterError(f'd={d} must be at least 3')
        result = graph.copy()
        for v in graph.vertices():
            previous = v
            for _ in range(d - 2):
                current = result.add_vertex()
                result.add_edge(previous, current)
                previous = current
        logger.debug(f'vc_to_dpvc: {graph.num_vertices()} -> {result.num_vertices()} vertices for d={d}')
        return result
