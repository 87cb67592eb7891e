# Audit Services

import logging
from typing import Iterable, Set

from src.config import get_config

from ..exceptions import KernelInvariantError, ObservationViolation
from ..models.graph import Graph, VertexId
from ..models.instance import KernelStats, PvcInstance
from ..models.packing import Packing

logger = logging.getLogger(__name__)

# Massimo numero di vertici senza archi verso M per forma di componente
_UNATTACHED_LIMITS = {
    'star': 2,
    'star_with_triangle': 4,
    'di_star': 4,
}


class AuditService:
    """Service per la classificazione delle componenti P_d-free e l'audit delle dimensioni del kernel."""

    # Riconoscitori di forme

    @staticmethod
    def is_star(graph: Graph) -> bool:
        """q-star: un centro adiacente a tutte le q foglie, nessun altro arco (q >= 0)."""
        n = graph.num_vertices()
        if n == 0 or graph.num_edges() != n - 1:
            return False
        return n <= 2 or graph.max_degree() == n - 1

    @staticmethod
    def is_triangle(graph: Graph) -> bool:
        return graph.num_vertices() == 3 and graph.num_edges() == 3

    @staticmethod
    def is_star_with_triangle(graph: Graph) -> bool:
        """Stella con due foglie collegate da un arco."""
        n = graph.num_vertices()
        if n < 3 or graph.num_edges() != n:
            return False
        for center in graph.vertices():
            if graph.degree(center) != n - 1:
                continue
            rest = [graph.degree(v) for v in graph.vertices() if v != center]
            if rest.count(2) == 2 and all(deg in (1, 2) for deg in rest):
                return True
        return False

    @staticmethod
    def is_di_star(graph: Graph) -> bool:
        """Due stelle con i centri collegati: albero con al piu' due vertici interni adiacenti."""
        n = graph.num_vertices()
        if n < 2 or graph.num_edges() != n - 1 or len(graph.connected_components()) != 1:
            return False
        inner = [v for v in graph.vertices() if graph.degree(v) >= 2]
        if len(inner) <= 1:
            return True
        return len(inner) == 2 and graph.has_edge(inner[0], inner[1])

    @staticmethod
    def classify_component(graph: Graph, component: Iterable[VertexId], d: int) -> str:
        """
        Classifica una componente connessa P_d-free (d in {4, 5}).

        Returns:
            'star' o 'triangle' per d=4; 'small', 'star_with_triangle' o
            'di_star' per d=5

        Raises:
            ObservationViolation: Se la componente non rientra nella tassonomia
        """
        sub = graph.induced_subgraph(component)
        if d == 4:
            if AuditService.is_star(sub):
                return 'star'
            if AuditService.is_triangle(sub):
                return 'triangle'
        elif d == 5:
            if sub.num_vertices() <= 4:
                return 'small'
            if AuditService.is_star_with_triangle(sub):
                return 'star_with_triangle'
            if AuditService.is_di_star(sub):
                return 'di_star'
        raise ObservationViolation(
            f'component {sorted(component)} with {sub.num_edges()} edges does not classify for d={d}'
        )

    @staticmethod
    def size_bounds(d: int, k: int) -> dict:
        """Bound totali e parziali sul numero di archi del kernel per d in {4, 5}."""
        if d == 4:
            return {'total': 96 * k * k + 96 * k, 'incident_m': 24 * k * k + 24 * k,
                    'outside_m': 72 * k * k + 72 * k}
        if d == 5:
            return {'total': 245 * k * k + 245 * k, 'incident_m': 35 * k * k + 35 * k,
                    'outside_m': 210 * k * k + 210 * k}
        raise KernelInvariantError(f'no quadratic size bound for d={d}')

    @staticmethod
    def audit_kernel_size(reduced: PvcInstance, packing: Packing, config=None) -> KernelStats:
        """
        Audit di struttura e dimensione di un'istanza ridotta con le regole 1-4.

        Args:
            reduced: Istanza ridotta (d in {4, 5})
            packing: Packing massimale dell'istanza ridotta

        Returns:
            KernelStats con conteggi, bound e classificazione delle componenti

        Raises:
            ObservationViolation: Se una componente di G \\ M non e' classificabile
            KernelInvariantError: Se un bound asserito non vale
        """
        config = config or get_config()
        graph, d, k = reduced.graph, reduced.d, reduced.k
        covered: Set[VertexId] = set(packing.vertex_set)
        bounds = AuditService.size_bounds(d, k)

        incident_m = sum(1 for u, v in graph.edges() if u in covered or v in covered)
        outside = graph.without(covered)
        outside_m = outside.num_edges()

        classes = {}
        unattached_excess = []
        detached = []
        for component in outside.connected_components():
            shape = AuditService.classify_component(outside, component, d)
            classes[shape] = classes.get(shape, 0) + 1
            unattached = [v for v in component if not (graph.neighbor_set(v) & covered)]
            if len(unattached) == len(component):
                detached.append(min(component))
            limit = _UNATTACHED_LIMITS.get(shape)
            if limit is not None and len(unattached) > limit:
                unattached_excess.append(min(component))

        degree_bound = (d + 2) * (k + 1)
        stats = KernelStats(
            d=d,
            k=k,
            method='small',
            n_out=graph.num_vertices(),
            m_out=graph.num_edges(),
            k_out=k,
            bound=bounds['total'],
            bound_satisfied=graph.num_edges() <= bounds['total'],
            max_degree=graph.max_degree(),
            degree_bound=degree_bound,
            packing_size=len(packing),
            audit={
                'component_classes': classes,
                'edges_incident_m': incident_m,
                'edges_incident_m_bound': bounds['incident_m'],
                'edges_outside_m': outside_m,
                'edges_outside_m_bound': bounds['outside_m'],
                'components_without_m_edge': len(detached),
                'components_over_unattached_limit': len(unattached_excess),
            },
        )

        logger.debug(f'audit d={d} k={k}: classes={classes} incident={incident_m} outside={outside_m}')

        if config.CHECK_INVARIANTS:
            if detached:
                raise KernelInvariantError(f'components without edges to M: roots {detached}')
            if unattached_excess:
                raise KernelInvariantError(f'components with too many vertices away from M: {unattached_excess}')
            if stats.max_degree > degree_bound:
                raise KernelInvariantError(f'max degree {stats.max_degree} exceeds {degree_bound}')
            if incident_m > bounds['incident_m']:
                raise KernelInvariantError(f'{incident_m} edges incident on M exceed {bounds["incident_m"]}')
            if outside_m > bounds['outside_m']:
                raise KernelInvariantError(f'{outside_m} edges outside M exceed {bounds["outside_m"]}')
            if not stats.bound_satisfied:
                raise KernelInvariantError(f'{graph.num_edges()} edges exceed kernel bound {bounds["total"]}')
        return stats
