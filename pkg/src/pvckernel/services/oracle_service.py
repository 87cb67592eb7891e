# Oracle Services

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Set

from src.config import get_config

from ..exceptions import ParameterError
from ..models.decision import Decision
from ..models.graph import Graph, VertexId, validate_vertex_set
from .path_service import PathService

logger = logging.getLogger(__name__)


class OracleService:
    """Risolutori esatti di riferimento: branching O*(d^k) ed enumerazione di sottoinsiemi."""

    # Branching

    @staticmethod
    def solve_branching(graph: Graph, d: int, k: int, config=None) -> Decision:
        """
        Decide (G, d, k) ramificando sui d vertici di un d-cammino qualsiasi.

        Args:
            graph: Grafo dell'istanza
            d: Numero di vertici dei cammini da colpire
            k: Budget

        Returns:
            Decision con witness su YES

        Raises:
            ParameterError: Se k < 0 o d fuori intervallo
        """
        if k < 0:
            raise ParameterError(f'k={k} must be non-negative')
        PathService.check_d(d, config)

        witness = OracleService._branch(graph, d, k, set(), config)
        if witness is None:
            return Decision(yes=False)
        return Decision(yes=True, witness=frozenset(witness))

    @staticmethod
    def _branch(graph: Graph, d: int, budget: int, removed: Set[VertexId], config) -> Optional[Set[VertexId]]:
        path = PathService.find_d_path(graph, d, removed, config)
        if path is None:
            return set(removed)
        if budget == 0:
            return None
        for v in path:
            removed.add(v)
            found = OracleService._branch(graph, d, budget - 1, removed, config)
            removed.discard(v)
            if found is not None:
                return found
        return None

    # Enumerazione

    @staticmethod
    def min_pvc(graph: Graph, d: int, config=None) -> int:
        """
        Dimensione minima di una soluzione per enumerazione di sottoinsiemi a cardinalita' crescente.

        Raises:
            ParameterError: Se il grafo supera MIN_PVC_MAX_VERTICES vertici o d e' fuori intervallo
        """
        config = config or get_config()
        PathService.check_d(d, config)
        n = graph.num_vertices()
        if n > config.MIN_PVC_MAX_VERTICES:
            raise ParameterError(
                f'min_pvc enumerates subsets of at most {config.MIN_PVC_MAX_VERTICES} vertices, got {n}'
            )

        _, masks = OracleService._bitmasks(graph)
        full = (1 << n) - 1
        for size in range(n + 1):
            for chosen in combinations(range(n), size):
                removed = 0
                for i in chosen:
                    removed |= 1 << i
                if not OracleService._has_path(masks, full & ~removed, d):
                    logger.debug(f'min_pvc: optimum {size} on {n} vertices')
                    return size
        return n

    # Controlli indipendenti

    @staticmethod
    def is_pd_free(graph: Graph, d: int) -> bool:
        """Vero se il grafo non contiene cammini su d vertici."""
        if d < 1:
            raise ParameterError(f'd={d} must be positive')
        _, masks = OracleService._bitmasks(graph)
        return not OracleService._has_path(masks, (1 << len(masks)) - 1, d)

    @staticmethod
    def is_cover(graph: Graph, d: int, vertices: Iterable[VertexId]) -> bool:
        """Vero se la rimozione di vertices rende il grafo P_d-free."""
        removed = validate_vertex_set(graph, vertices)
        return OracleService.is_pd_free(graph.without(removed), d)

    @staticmethod
    def _bitmasks(graph: Graph):
        order: List[VertexId] = graph.vertices()
        index: Dict[VertexId, int] = {v: i for i, v in enumerate(order)}
        masks = []
        for v in order:
            mask = 0
            for w in graph.neighbor_set(v):
                mask |= 1 << index[w]
            masks.append(mask)
        return order, masks

    @staticmethod
    def _has_path(masks: List[int], alive: int, d: int) -> bool:
        def extend(v: int, visited: int, count: int) -> bool:
            if count == d:
                return True
            candidates = masks[v] & alive & ~visited
            while candidates:
                low = candidates & -candidates
                w = low.bit_length() - 1
                if extend(w, visited | low, count + 1):
                    return True
                candidates ^= low
            return False

        remaining = alive
        while remaining:
            low = remaining & -remaining
            if extend(low.bit_length() - 1, low, 1):
                return True
            remaining ^= low
        return False
