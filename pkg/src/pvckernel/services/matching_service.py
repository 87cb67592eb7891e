# Matching Services

import logging

import networkx as nx

from ..models.graph import Graph, VertexId, edge_key
from ..models.matching import AdjacentMatching, Matching

logger = logging.getLogger(__name__)


class MatchingService:
    """Service per matching massimi e matching adiacenti a un vertice."""

    @staticmethod
    def maximum_matching(graph: Graph) -> Matching:
        """
        Matching di cardinalita' massima in un grafo generale.

        Usa l'algoritmo di Edmonds (contrazione dei blossom) di networkx con
        pesi unitari; nodi e archi vengono inseriti per id crescente, quindi
        l'output e' deterministico.

        Args:
            graph: Grafo di input

        Returns:
            Matching massimo
        """
        pairs = nx.max_weight_matching(graph.to_networkx(), maxcardinality=True)
        return Matching(frozenset(edge_key(u, v) for u, v in pairs))

    @staticmethod
    def build_gv(graph: Graph, v: VertexId) -> Graph:
        """
        Costruisce G_v: G[A u B] senza gli archi interni a B.

        A = N(v), B = N(A) \\ {v}; v non appartiene a G_v.

        Raises:
            GraphError: Se v non e' vivo
        """
        side_a = set(graph.neighbor_set(v))
        side_b = graph.neighborhood(side_a) - {v}
        gv = graph.induced_subgraph(side_a | side_b)
        for x, y in gv.edges():
            if x in side_b and y in side_b:
                gv.delete_edge(x, y)
        return gv

    @staticmethod
    def max_adjacent_matching(graph: Graph, v: VertexId) -> AdjacentMatching:
        """
        Matching massimo adiacente a v.

        Ogni arco e' orientato come (a_i, b_i) con a_i in N(v); se entrambi gli
        estremi sono vicini di v, a_i e' quello di id minore.

        Args:
            graph: Grafo di input
            v: Vertice centro

        Returns:
            AdjacentMatching
        """
        gv = MatchingService.build_gv(graph, v)
        matching = MatchingService.maximum_matching(gv)
        side_a = graph.neighbor_set(v)

        oriented = []
        for x, y in sorted(matching.edges):
            # x < y: x e' a_i se adiacente a v, altrimenti lo e' y
            if x in side_a:
                oriented.append((x, y))
            else:
                oriented.append((y, x))

        logger.debug(f'adjacent matching of vertex {v} has size {len(matching)}')
        return AdjacentMatching(center=v, matching=matching, oriented=tuple(oriented))
