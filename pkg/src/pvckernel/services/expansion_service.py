# Expansion Services

import logging
from typing import Iterable, Set

import networkx as nx

from ..exceptions import ExpansionPreconditionError, KernelInvariantError
from ..models.expansion import ExpansionCertificate
from ..models.graph import Graph, VertexId

logger = logging.getLogger(__name__)

_SOURCE = ('s',)
_SINK = ('t',)


class ExpansionService:
    """Service per la versione costruttiva dell'Expansion Lemma."""

    @staticmethod
    def check_preconditions(bipartite: Graph, side_a: Set[VertexId], side_b: Set[VertexId], q: int) -> None:
        """
        Verifica le ipotesi del lemma.

        Raises:
            ExpansionPreconditionError: con la clausola violata
        """
        if q < 1:
            raise ExpansionPreconditionError('q', f'q={q} must be at least 1')
        if side_a & side_b or (side_a | side_b) != bipartite.vertex_set():
            raise ExpansionPreconditionError('bipartition', 'A and B must partition the vertex set')
        for u, v in bipartite.edges():
            if (u in side_a) == (v in side_a):
                raise ExpansionPreconditionError('bipartition', f'edge ({u}, {v}) inside one side')
        if not side_a:
            raise ExpansionPreconditionError('size', 'A must be non-empty')
        if len(side_b) < q * len(side_a):
            raise ExpansionPreconditionError('size', f'|B|={len(side_b)} < q|A|={q * len(side_a)}')
        isolated = sorted(b for b in side_b if bipartite.degree(b) == 0)
        if isolated:
            raise ExpansionPreconditionError('isolated', f'isolated vertices in B: {isolated}')

    @staticmethod
    def _flow_network(bipartite: Graph, side_a: Set[VertexId], side_b: Set[VertexId], q: int) -> nx.DiGraph:
        network = nx.DiGraph()
        network.add_node(_SOURCE)
        for a in sorted(side_a):
            network.add_edge(_SOURCE, ('a', a), capacity=q)
        for a in sorted(side_a):
            for b in bipartite.neighbors(a):
                if b in side_b:
                    network.add_edge(('a', a), ('b', b), capacity=1)
        for b in sorted(side_b):
            network.add_edge(('b', b), _SINK, capacity=1)
        network.add_node(_SINK)
        return network

    @staticmethod
    def q_expansion(bipartite: Graph, side_a: Iterable[VertexId], side_b: Iterable[VertexId],
                    q: int) -> ExpansionCertificate:
        """
        Trova A' e B' con una q-espansione di A' in B' e N(B') contenuto in A'.

        A ogni round calcola un flusso massimo (capacita' q verso ogni vertice
        di A, 1 sugli archi e verso il pozzo). Se tutto A e' saturo il round
        restituisce il certificato; altrimenti il lato sorgente di un taglio
        minimo individua un insieme A_Z che viola Hall, e A_Z viene rimosso
        insieme a N(A_Z).

        Args:
            bipartite: Grafo bipartito ospite
            side_a: Lato A
            side_b: Lato B
            q: Molteplicita' dell'espansione

        Returns:
            ExpansionCertificate

        Raises:
            ExpansionPreconditionError: Se le ipotesi del lemma non valgono
        """
        current_a = set(side_a)
        current_b = set(side_b)
        ExpansionService.check_preconditions(bipartite, current_a, current_b, q)

        rounds = 0
        while True:
            rounds += 1
            if not current_a or len(current_b) < q * len(current_a):
                raise KernelInvariantError('expansion lemma hypotheses lost between rounds')

            network = ExpansionService._flow_network(bipartite, current_a, current_b, q)
            flow_value, flow = nx.maximum_flow(network, _SOURCE, _SINK)
            if flow_value == q * len(current_a):
                edges = frozenset(
                    (a_node[1], b_node[1])
                    for a_node, targets in flow.items() if a_node[0] == 'a'
                    for b_node, amount in targets.items() if amount > 0 and b_node[0] == 'b'
                )
                logger.debug(f"q-expansion found after {rounds} rounds: |A'|={len(current_a)} |B'|={len(current_b)}")
                return ExpansionCertificate(
                    q=q,
                    a_prime=frozenset(current_a),
                    b_prime=frozenset(current_b),
                    edges=edges,
                )

            _, (source_side, _) = nx.minimum_cut(network, _SOURCE, _SINK)
            violating = {node[1] for node in source_side if node[0] == 'a'}
            if not violating or violating == current_a:
                raise KernelInvariantError('min cut did not isolate a proper Hall-violating set')

            current_a -= violating
            current_b -= bipartite.neighborhood(violating)
