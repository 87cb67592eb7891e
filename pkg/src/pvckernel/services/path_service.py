# Path Services

import logging
from typing import Iterable, List, Optional, Set

from src.config import get_config

from ..exceptions import ParameterError
from ..models.graph import DPath, Graph, VertexId
from ..models.packing import Packing, PackingOutcome

logger = logging.getLogger(__name__)


class PathService:
    """Service per la ricerca di d-cammini e il packing greedy."""

    @staticmethod
    def check_d(d: int, config=None) -> None:
        """
        Verifica che d sia nell'intervallo configurato.

        Raises:
            ParameterError: Se d e' fuori da [MIN_D, MAX_D]
        """
        config = config or get_config()
        if not isinstance(d, int) or not config.MIN_D <= d <= config.MAX_D:
            raise ParameterError(f'd={d} outside supported range [{config.MIN_D}, {config.MAX_D}]')

    @staticmethod
    def find_d_path(graph: Graph, d: int, forbidden: Optional[Iterable[VertexId]] = None,
                    config=None) -> Optional[DPath]:
        """
        Cerca un d-cammino in graph che eviti i vertici proibiti.

        La ricerca e' un backtracking limitato in profondita': vertici di
        partenza per id crescente, vicini per id crescente. Il primo cammino
        trovato ha sempre primo id < ultimo id.

        Args:
            graph: Grafo ospite
            d: Numero di vertici del cammino
            forbidden: Vertici da evitare

        Returns:
            DPath oppure None se il grafo senza i proibiti e' P_d-free
        """
        PathService.check_d(d, config)
        blocked: Set[VertexId] = set(forbidden or ())

        for start in graph.vertices():
            if start in blocked:
                continue
            path = [start]
            on_path = {start}
            if PathService._extend(graph, path, on_path, d, blocked):
                return DPath(tuple(path))
        return None

    @staticmethod
    def _extend(graph: Graph, path: List[VertexId], on_path: Set[VertexId], d: int,
                blocked: Set[VertexId]) -> bool:
        if len(path) == d:
            return True
        for w in graph.neighbors(path[-1]):
            if w in on_path or w in blocked:
                continue
            path.append(w)
            on_path.add(w)
            if PathService._extend(graph, path, on_path, d, blocked):
                return True
            path.pop()
            on_path.discard(w)
        return False

    @staticmethod
    def greedy_packing(graph: Graph, d: int, k: int, config=None) -> PackingOutcome:
        """
        Packing greedy massimale di d-cammini.

        Args:
            graph: Grafo dell'istanza
            d: Numero di vertici dei cammini
            k: Budget della soluzione

        Returns:
            PackingOutcome: YES se il grafo e' gia' P_d-free, NO se il packing
            raggiunge k+1 cammini, altrimenti il packing massimale

        Raises:
            ParameterError: Se k < 0 o d fuori intervallo
        """
        if k < 0:
            raise ParameterError(f'k={k} must be non-negative')
        PathService.check_d(d, config)

        packing = Packing(d=d)
        covered: Set[VertexId] = set()
        while len(packing) <= k:
            path = PathService.find_d_path(graph, d, covered, config)
            if path is None:
                break
            packing.add(path)
            covered.update(path.vertices)

        if len(packing) == 0:
            logger.debug(f'greedy packing: graph is P_{d}-free, answering YES')
            return PackingOutcome.yes()
        if len(packing) >= k + 1:
            logger.debug(f'greedy packing: {len(packing)} disjoint {d}-paths > k={k}, answering NO')
            return PackingOutcome.no(packing)

        logger.debug(f'greedy packing: maximal packing with {len(packing)} paths')
        return PackingOutcome.of(packing)
