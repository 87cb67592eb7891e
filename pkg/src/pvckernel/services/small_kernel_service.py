# Small Kernel Services (d = 4, 5)

import logging
from typing import Optional

from src.config import get_config

from ..exceptions import KernelInvariantError, ObservationViolation, ParameterError
from ..models.graph import VertexId
from ..models.instance import (
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
from ..models.matching import AdjacentMatching
from .audit_service import AuditService
from .expansion_service import ExpansionService
from .matching_service import MatchingService
from .path_service import PathService

logger = logging.getLogger(__name__)


class SmallKernelService:
    """Service per il kernel quadratico di 4-PVC e 5-PVC."""

    @staticmethod
    def check_small_d(d: int, config=None) -> None:
        config = config or get_config()
        if d not in config.SMALL_KERNEL_D:
            raise ParameterError(f'd={d} not supported by the small kernel, expected one of {config.SMALL_KERNEL_D}')

    # Rule 1

    @staticmethod
    def rule_component(inst: PvcInstance, config=None) -> Optional[ComponentRemoved]:
        """
        Rimuove una componente connessa P_d-free (la prima per id minimo).

        Returns:
            Evento ComponentRemoved oppure None se la regola non si applica
        """
        graph = inst.graph
        for component in graph.connected_components():
            if len(component) < inst.d or PathService.find_d_path(
                    graph.induced_subgraph(component), inst.d, config=config) is None:
                for v in sorted(component):
                    graph.delete_vertex(v)
                logger.debug(f'rule 1: removed P_{inst.d}-free component {sorted(component)}')
                return ComponentRemoved(frozenset(component))
        return None

    # Rule 2

    @staticmethod
    def rule_degree_one(inst: PvcInstance, config=None) -> Optional[DegreeOneTwinDeleted]:
        """
        Se v ha due vicini x, y con N(x) = N(y) = {v}, cancella il gemello di id maggiore.

        Returns:
            Evento DegreeOneTwinDeleted oppure None
        """
        graph = inst.graph
        for v in graph.vertices():
            pendants = [x for x in graph.neighbors(v) if graph.degree(x) == 1]
            if len(pendants) >= 2:
                x = pendants[-1]
                graph.delete_vertex(x)
                logger.debug(f'rule 2: deleted degree-one twin {x} of vertex {v}')
                return DegreeOneTwinDeleted(x=x, v=v)
        return None

    # Rule 3

    @staticmethod
    def rule_matching(inst: PvcInstance, config=None) -> Optional[HighDegreeVertexDeleted]:
        """
        Cancella il primo v con un matching adiacente di dimensione >= k+2 e decrementa k.

        Con k = 0 l'istanza diventa NO (verdict impostato, k resta 0).

        Returns:
            Evento HighDegreeVertexDeleted oppure None
        """
        SmallKernelService.check_small_d(inst.d, config)
        graph = inst.graph
        for v in graph.vertices():
            if graph.degree(v) < inst.k + 2:
                continue
            adjacent = MatchingService.max_adjacent_matching(graph, v)
            if len(adjacent) >= inst.k + 2:
                graph.delete_vertex(v)
                if inst.k == 0:
                    inst.verdict = Verdict.NO
                else:
                    inst.k -= 1
                logger.debug(f'rule 3: deleted vertex {v} with adjacent matching of size {len(adjacent)}, k={inst.k}')
                return HighDegreeVertexDeleted(v=v, matching_size=len(adjacent))
        return None

    # Partizione di X

    @staticmethod
    def classify_x(inst: PvcInstance, v: VertexId, adjacent: AdjacentMatching) -> XPartition:
        """
        Partiziona X = N(v) \\ M in X0, X1, X2 e calcola M1.

        Args:
            inst: Istanza
            v: Vertice centro
            adjacent: Matching massimo adiacente a v

        Returns:
            XPartition

        Raises:
            ObservationViolation: Se la struttura di X attorno al matching non vale (matching non massimo)
        """
        graph = inst.graph
        covered = set(adjacent.covered)
        x_set = set(graph.neighbor_set(v)) - covered

        x0, x1, x2 = set(), set(), set()
        for x in sorted(x_set):
            others = graph.neighbor_set(x) - {v}
            if not others <= covered:
                raise ObservationViolation(f'vertex {x} of X has neighbours outside M: {sorted(others - covered)}')
            if not others:
                x0.add(x)
            elif any(a in others and b in others for a, b in adjacent.oriented):
                x2.add(x)
            else:
                x1.add(x)

        for a, b in adjacent.oriented:
            seen_a = graph.neighbor_set(a) & x_set
            seen_b = graph.neighbor_set(b) & x_set
            if any(x != y for x in seen_a for y in seen_b):
                raise ObservationViolation(f'two vertices of X see opposite ends of matching edge ({a}, {b})')
            dominating = seen_a & seen_b
            if dominating and (seen_a | seen_b) != dominating:
                raise ObservationViolation(f'matching edge ({a}, {b}) is dominated but seen by other X vertices')

        m1 = covered & graph.neighborhood(x1)
        for a, b in adjacent.oriented:
            if a in m1 and b in m1:
                raise ObservationViolation(f'both ends of matching edge ({a}, {b}) lie in M1')

        return XPartition(x0=frozenset(x0), x1=frozenset(x1), x2=frozenset(x2), m1=frozenset(m1))

    # Rule 4

    @staticmethod
    def rule_expansion(inst: PvcInstance, config=None) -> Optional[ExpansionEdgeDeleted]:
        """
        Cancella un arco {x, v} con x in X' per il primo v di grado >= (d+2)(k+1)+1.

        Presuppone un'istanza ridotta rispetto alle regole 2 e 3.

        Returns:
            Evento ExpansionEdgeDeleted oppure None

        Raises:
            KernelInvariantError: Se le ipotesi dell'Expansion Lemma non valgono
        """
        SmallKernelService.check_small_d(inst.d, config)
        graph, d, k = inst.graph, inst.d, inst.k
        threshold = (d + 2) * (k + 1) + 1

        for v in graph.vertices():
            if graph.degree(v) < threshold:
                continue
            adjacent = MatchingService.max_adjacent_matching(graph, v)
            partition = SmallKernelService.classify_x(inst, v, adjacent)
            if len(adjacent) > k + 1 or len(partition.x0) > 1:
                raise KernelInvariantError('rule 4 requires an instance reduced under rules 2 and 3')
            if len(partition.x1) < (d - 1) * (k + 1):
                raise KernelInvariantError(
                    f'|X1|={len(partition.x1)} below (d-1)(k+1) for vertex {v} of degree {graph.degree(v)}'
                )

            bipartite = graph.induced_subgraph(partition.m1 | partition.x1)
            for a, b in bipartite.edges():
                if a in partition.m1 and b in partition.m1:
                    bipartite.delete_edge(a, b)

            certificate = ExpansionService.q_expansion(bipartite, partition.m1, partition.x1, d - 1)
            x = min(certificate.b_prime)
            graph.delete_edge(x, v)
            logger.debug(f"rule 4: deleted edge {{{x}, {v}}} (|M'|={len(certificate.a_prime)}, |X'|={len(certificate.b_prime)})")
            return ExpansionEdgeDeleted(x=x, v=v)
        return None

    # Pipeline

    @staticmethod
    def kernelize_small(inst: PvcInstance, config=None) -> KernelResult:
        """
        Applica esaustivamente le regole 1-4 (priorita' 1, 2, 3, 4, ripartendo dalla 1
        dopo ogni modifica), poi il packing greedy e l'audit delle dimensioni.

        Args:
            inst: Istanza con d in {4, 5} e k >= 0

        Returns:
            KernelResult con istanza ridotta (eventualmente decisa), traccia e statistiche

        Raises:
            ParameterError: Se d o k non sono supportati
            KernelInvariantError: Se un bound asserito non vale
        """
        config = config or get_config()
        SmallKernelService.check_small_d(inst.d, config)
        if inst.k < 0:
            raise ParameterError(f'k={inst.k} must be non-negative')

        work = inst.copy()
        trace = ReductionTrace()
        budget = work.graph.num_vertices() + work.graph.num_edges()
        rules = (
            SmallKernelService.rule_component,
            SmallKernelService.rule_degree_one,
            SmallKernelService.rule_matching,
            SmallKernelService.rule_expansion,
        )

        firings = 0
        exhausted = False
        while not work.decided:
            event = None
            for rule in rules:
                event = rule(work, config)
                if event is not None:
                    break
            if event is None:
                exhausted = True
                break
            trace.record(event)
            if isinstance(event, HighDegreeVertexDeleted):
                trace.record(KDecremented())
            firings += 1
            if firings > budget:
                raise KernelInvariantError('reduction rules did not terminate within |V|+|E| firings')

        packing = None
        if not work.decided:
            outcome = PathService.greedy_packing(work.graph, work.d, work.k, config)
            if outcome.is_yes:
                work.verdict = Verdict.YES
            elif outcome.is_no:
                work.verdict = Verdict.NO
            packing = outcome.packing

        if packing is not None and not work.decided:
            stats = AuditService.audit_kernel_size(work, packing, config)
        else:
            stats = KernelStats(
                d=work.d,
                k=work.k,
                method='small',
                n_out=work.graph.num_vertices(),
                m_out=work.graph.num_edges(),
                k_out=work.k,
                max_degree=work.graph.max_degree(),
                degree_bound=(work.d + 2) * (work.k + 1),
                packing_size=len(packing) if packing is not None else 0,
            )
            if config.CHECK_INVARIANTS and exhausted and work.graph.max_degree() > stats.degree_bound:
                raise KernelInvariantError(
                    f'max degree {work.graph.max_degree()} exceeds {stats.degree_bound} after reduction'
                )

        stats.k = inst.k
        stats.n_in = inst.graph.num_vertices()
        stats.m_in = inst.graph.num_edges()
        stats.decided = work.verdict.value if work.verdict else None
        stats.rule_firings = trace.firings()

        logger.info(f'small kernel d={inst.d} k={inst.k}: n {stats.n_in}->{stats.n_out}, '
                    f'm {stats.m_in}->{stats.m_out}, decided={stats.decided}')
        return KernelResult(instance=work, stats=stats, trace=trace, packing=packing)
