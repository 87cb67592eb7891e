# General Kernel Services (3 <= d <= MAX_D)

import logging
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from src.config import get_config

from ..exceptions import KernelInvariantError, ParameterError
from ..models.forest import DfsForest, MarkingContext, MarkSet, Request, RequestTable, SubRequest
from ..models.graph import Graph, VertexId, validate_vertex_set
from ..models.instance import KernelResult, KernelStats, PvcInstance, Verdict
from ..models.packing import Packing
from .path_service import PathService

logger = logging.getLogger(__name__)

PathTuple = Tuple[VertexId, ...]


class GeneralKernelService:
    """Service per il kernel polinomiale di d-PVC basato su foresta DFS e marcatura."""

    @staticmethod
    def check_general_d(d: int, config=None) -> None:
        config = config or get_config()
        if not isinstance(d, int) or not config.GENERAL_MIN_D <= d <= config.MAX_D:
            raise ParameterError(
                f'd={d} outside general kernel range [{config.GENERAL_MIN_D}, {config.MAX_D}]'
            )

    # Foresta

    @staticmethod
    def build_dfs_forest(graph: Graph, m_set: Iterable[VertexId]) -> DfsForest:
        """
        Foresta DFS di G \\ M.

        Args:
            graph: Grafo dell'istanza
            m_set: Vertici del packing massimale

        Returns:
            DfsForest con radice di id minimo per componente e figli per id crescente

        Raises:
            GraphError: Se M contiene id non vivi
        """
        members = validate_vertex_set(graph, m_set)
        return DfsForest.build(graph, members)

    # Cammini con estremi prescritti

    @staticmethod
    def iter_paths(graph: Graph, members: Set[VertexId], f: FrozenSet[VertexId],
                   l: int) -> Iterator[PathTuple]:
        """
        Enumera i cammini di lunghezza l in G[H u f] con ogni x in f come estremo.

        Il cammino parte da min(f); con |f| = 2 termina in max(f). L'ordine di
        visita e' per id crescente, quindi l'enumerazione e' deterministica.

        Raises:
            ParameterError: Se f interseca H, |f| non e' 1 o 2, oppure l < 1
        """
        if l < 1:
            raise ParameterError(f'path length l={l} must be at least 1')
        if len(f) not in (1, 2):
            raise ParameterError(f'endpoint set {sorted(f)} must have one or two vertices')
        if f & members:
            raise ParameterError(f'endpoint set {sorted(f)} intersects H')

        ends = sorted(f)
        target = ends[1] if len(ends) == 2 else None
        path = [ends[0]]
        on_path = {ends[0]}

        def walk() -> Iterator[PathTuple]:
            if len(path) == l + 1:
                yield tuple(path)
                return
            last = path[-1]
            if target is not None and len(path) == l:
                if graph.has_edge(last, target):
                    yield tuple(path) + (target,)
                return
            for w in graph.neighbors(last):
                if w in members and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from walk()
                    path.pop()
                    on_path.discard(w)

        yield from walk()

    @staticmethod
    def enumerate_paths(members: Iterable[VertexId], f: Iterable[VertexId], l: int, graph: Graph,
                        limit: Optional[int] = None) -> List[PathTuple]:
        """Lista dei cammini di iter_paths, troncata a limit."""
        found = []
        for path in GeneralKernelService.iter_paths(graph, set(members), frozenset(f), l):
            found.append(path)
            if limit is not None and len(found) >= limit:
                break
        return found

    @staticmethod
    def first_path(members: Iterable[VertexId], f: Iterable[VertexId], l: int,
                   graph: Graph) -> Optional[PathTuple]:
        paths = GeneralKernelService.enumerate_paths(members, f, l, graph, limit=1)
        return paths[0] if paths else None

    @staticmethod
    def satisfies(members: Iterable[VertexId], f: Iterable[VertexId], l: int, graph: Graph) -> bool:
        """Vero se H soddisfa la richiesta (f, l)."""
        return GeneralKernelService.first_path(members, f, l, graph) is not None

    # Richieste

    @staticmethod
    def requests(m_set: Iterable[VertexId], d: int) -> List[Request]:
        """Tutte le richieste (f, l) con f contenuto in M, |f| in {1, 2}, 1 <= l <= d-1."""
        ordered = sorted(m_set)
        endpoint_sets = [frozenset({x}) for x in ordered]
        endpoint_sets += [frozenset(pair) for pair in combinations(ordered, 2)]
        return [Request(f=f, l=l) for f in endpoint_sets for l in range(1, d)]

    @staticmethod
    def compute_y(graph: Graph, m_set: Iterable[VertexId], forest: DfsForest, d: int, k: int) -> RequestTable:
        """
        Calcola Y_{f,l} per ogni richiesta, le richieste risolte e l'unione Y.

        Y_{f,l} e' chiuso per antenati: la visita in postordine include v
        senza ricerca quando un figlio e' gia' in Y_{f,l}. Le richieste d'arco
        (|f| = 2, l = 1) sono soddisfatte da ogni H e il loro unico cammino
        sta in G[M], quindi non contribuiscono a Y.

        Returns:
            RequestTable
        """
        table = RequestTable()
        postorder = forest.postorder_vertices()
        threshold = k + d + 1

        for request in GeneralKernelService.requests(m_set, d):
            members: Set[VertexId] = set()
            for v in postorder:
                if any(c in members for c in forest.children[v]) or GeneralKernelService.satisfies(
                        forest.subtree(v), request.f, request.l, graph):
                    members.add(v)
            table.y_map[request] = frozenset(members)
            table.leaves[request] = forest.leaves_within(members)

            if request.is_edge:
                table.edge_requests.add(request)
            elif len(table.leaves[request]) >= threshold:
                table.resolved.add(request)
            else:
                table.y_union |= members

        logger.debug(f'requests: {len(table.y_map)} total, {len(table.resolved)} resolved, '
                     f'{len(table.edge_requests)} edge requests, |Y|={len(table.y_union)}')
        return table

    @staticmethod
    def sub_requests(anchor: VertexId, ancestors: List[VertexId], m_set: Iterable[VertexId],
                     d: int) -> List[SubRequest]:
        """Sotto-richieste (g, j) con g contenuto in M u anc(y) e non contenuto in M."""
        anc = sorted(ancestors)
        groups = [frozenset({a}) for a in anc]
        groups += [frozenset(pair) for pair in combinations(anc, 2)]
        groups += [frozenset({a, m}) for a in anc for m in sorted(m_set)]
        groups.sort(key=lambda g: (len(g), tuple(sorted(g))))
        return [SubRequest(g=g, j=j, anchor=anchor) for g in groups for j in range(1, d)]

    # Marcatura

    @staticmethod
    def mark2(graph: Graph, sub: SubRequest, component: FrozenSet[VertexId], excluded: FrozenSet[VertexId],
              marks: MarkSet, d: int, visited: Optional[Set[FrozenSet[VertexId]]] = None) -> int:
        """
        Marca un cammino di P^{C \\ W}_{g,j} e ricorre su W u {v} per ogni v del cammino fuori da g.

        L'esito dipende solo da W: un insieme W gia' visitato non viene
        riesplorato e le marcature restano identiche.

        Args:
            graph: Grafo dell'istanza
            sub: Sotto-richiesta (g, j)
            component: Vertici della componente C
            excluded: Insieme W
            marks: MarkSet da aggiornare
            d: Parametro d
            visited: Insiemi W gia' esplorati nella chiamata radice

        Returns:
            Numero di chiamate eseguite (radice inclusa)
        """
        if visited is None:
            visited = set()
        if excluded in visited:
            return 0
        visited.add(excluded)

        calls = 1
        if len(excluded) > 2 * d:
            return calls
        path = GeneralKernelService.first_path(component - excluded, sub.g, sub.j, graph)
        if path is None:
            return calls

        marks.mark_path(path)
        for v in path:
            if v not in sub.g:
                calls += GeneralKernelService.mark2(graph, sub, component, excluded | {v}, marks, d, visited)
        return calls

    @staticmethod
    def mark(graph: Graph, d: int, k: int, packing: Packing, config=None) -> MarkingContext:
        """
        Procedura di marcatura: G[M u Y], cammini delle richieste risolte,
        componenti di G \\ (M u Y) per ogni sotto-richiesta.

        Args:
            graph: Grafo dell'istanza
            d: Parametro d
            k: Budget
            packing: Packing massimale con al piu' k cammini

        Returns:
            MarkingContext con foresta, tabella delle richieste, marcature e contatori

        Raises:
            KernelInvariantError: Se un'asserzione strutturale o di conteggio fallisce
        """
        config = config or get_config()
        m_set = set(packing.vertex_set)
        forest = GeneralKernelService.build_dfs_forest(graph, m_set)
        table = GeneralKernelService.compute_y(graph, m_set, forest, d, k)
        y_union = table.y_union
        marks = MarkSet()
        context = MarkingContext(packing=packing, forest=forest, table=table, marks=marks)
        counters: Dict[str, int] = context.counters

        def phase(name: str, before: Dict[str, int]) -> None:
            after = marks.counts()
            context.phase_counts[name] = {key: after[key] - before[key] for key in after}

        before = marks.counts()
        marks.mark_induced(graph, m_set | y_union)
        phase('core', before)

        before = marks.counts()
        for request in sorted(table.resolved, key=Request.sort_key):
            chosen = []
            for leaf in table.leaves[request][:k + d + 1]:
                path = GeneralKernelService.first_path(forest.subtree(leaf), request.f, request.l, graph)
                if path is None:
                    raise KernelInvariantError(f'leaf {leaf} of a resolved request has no witness path')
                chosen.append(path)
                marks.mark_path(path)
            used: Set[VertexId] = set()
            for path in chosen:
                inner = set(path) - request.f
                if inner & used:
                    raise KernelInvariantError(
                        f'witness paths of request {sorted(request.f)}/{request.l} overlap outside f'
                    )
                used |= inner
        phase('resolved', before)

        before = marks.counts()
        components = [frozenset(c) for c in graph.without(m_set | y_union).connected_components()]
        attached = {c: graph.neighborhood(c) & y_union for c in components}
        context.components = components
        sub_total = 0
        sub_max = 0
        mark2_calls = 0
        mark2_tree = 0
        for y in sorted(y_union):
            ancestors = forest.ancestors(y)
            anc_set = set(ancestors)
            eligible = [c for c in components if attached[c] <= anc_set]
            subs = GeneralKernelService.sub_requests(y, ancestors, m_set, d)
            sub_total += len(subs)
            sub_max = max(sub_max, len(subs))
            if not eligible:
                continue
            for sub in subs:
                if sub.is_edge:
                    continue
                qualifying = [c for c in eligible if GeneralKernelService.satisfies(c, sub.g, sub.j, graph)]
                if len(qualifying) >= 2 * d:
                    for component in qualifying[:2 * d]:
                        marks.mark_path(GeneralKernelService.first_path(component, sub.g, sub.j, graph))
                    continue
                for component in qualifying:
                    calls = GeneralKernelService.mark2(graph, sub, component, frozenset(), marks, d)
                    mark2_calls += calls
                    mark2_tree = max(mark2_tree, calls)
        phase('sub_requests', before)

        all_leaves = forest.leaves_within(y_union)
        counters.update({
            'm_size': len(m_set),
            'y_size': len(y_union),
            'forest_max_depth': forest.max_depth(),
            'requests': len(table.y_map),
            'requests_resolved': len(table.resolved),
            'requests_edge': len(table.edge_requests),
            'request_bound': (comb(d * k, 2) + d * k) * (d - 1),
            'y_leaves': len(all_leaves),
            'y_leaf_bound': len(table.y_map) * (k + d),
            'components': len(components),
            'sub_requests': sub_total,
            'sub_requests_max_per_y': sub_max,
            'sub_request_bound_per_y': (len(m_set) * (d - 1) + comb(d - 1, 2) + (d - 1)) * (d - 1),
            'mark2_calls': mark2_calls,
            'mark2_max_tree': mark2_tree,
            'mark2_tree_bound': 2 * d ** (2 * d),
        })

        if config.CHECK_INVARIANTS:
            GeneralKernelService.check_marking(graph, d, context)
        return context

    @staticmethod
    def check_marking(graph: Graph, d: int, context: MarkingContext) -> None:
        """
        Verifica le proprieta' strutturali e i conteggi della marcatura.

        Raises:
            KernelInvariantError: Alla prima proprieta' violata
        """
        forest, table, marks, counters = context.forest, context.table, context.marks, context.counters

        deepest = max((len(forest.ancestors(v)) for v in forest.vertices()), default=0)
        if deepest > d - 1:
            raise KernelInvariantError(f'a forest vertex has {deepest} ancestors, more than d-1={d - 1}')
        offending = forest.non_back_edges(graph)
        if offending:
            raise KernelInvariantError(f'edges of G \\ M not joining ancestor and descendant: {offending}')
        for request, members in table.y_map.items():
            for v in members:
                if not set(forest.ancestors(v)) <= members:
                    raise KernelInvariantError(f'Y set of request {sorted(request.f)}/{request.l} not ancestor-closed')

        checks = (
            ('requests', 'request_bound'),
            ('y_leaves', 'y_leaf_bound'),
            ('sub_requests_max_per_y', 'sub_request_bound_per_y'),
            ('mark2_max_tree', 'mark2_tree_bound'),
        )
        for value_key, bound_key in checks:
            if counters[value_key] > counters[bound_key]:
                raise KernelInvariantError(
                    f'{value_key}={counters[value_key]} exceeds {bound_key}={counters[bound_key]}'
                )

        if not marks.is_closed():
            raise KernelInvariantError('a marked edge has an unmarked endpoint')
        if not marks.is_within(graph):
            raise KernelInvariantError('marked vertices or edges are not part of the input graph')

    # Pipeline

    @staticmethod
    def kernelize_general(inst: PvcInstance, config=None) -> KernelResult:
        """
        Kernel per d generale: packing greedy, marcatura, cancellazione del non marcato.

        Args:
            inst: Istanza con 3 <= d <= MAX_D e k >= 0

        Returns:
            KernelResult con (G^, k), statistiche per fase e contesto di marcatura

        Raises:
            ParameterError: Se d o k non sono supportati
            KernelInvariantError: Se un'asserzione di conteggio fallisce
        """
        config = config or get_config()
        GeneralKernelService.check_general_d(inst.d, config)
        if inst.k < 0:
            raise ParameterError(f'k={inst.k} must be non-negative')

        graph, d, k = inst.graph, inst.d, inst.k
        outcome = PathService.greedy_packing(graph, d, k, config)
        context = None

        if outcome.is_yes:
            kernel = PvcInstance(graph=graph.induced_subgraph(()), d=d, k=k, verdict=Verdict.YES)
        elif outcome.is_no:
            kernel = PvcInstance(graph=graph.copy(), d=d, k=k, verdict=Verdict.NO)
        else:
            context = GeneralKernelService.mark(graph, d, k, outcome.packing, config)
            reduced = graph.edge_subgraph(context.marks.vertices, context.marks.edges)
            kernel = PvcInstance(graph=reduced, d=d, k=k)

        stats = KernelStats(
            d=d,
            k=k,
            method='general',
            n_in=graph.num_vertices(),
            m_in=graph.num_edges(),
            n_out=kernel.graph.num_vertices(),
            m_out=kernel.graph.num_edges(),
            k_out=k,
            decided=kernel.verdict.value if kernel.verdict else None,
            rule_firings={'component': 0, 'degree_one': 0, 'matching': 0, 'expansion': 0},
            max_degree=kernel.graph.max_degree(),
            packing_size=len(outcome.packing) if outcome.packing is not None else 0,
        )
        if context is not None:
            stats.marks = dict(context.phase_counts)
            stats.instrumentation = dict(context.counters)
            stats.bound_satisfied = True if config.CHECK_INVARIANTS else None

        logger.info(f'general kernel d={d} k={k}: n {stats.n_in}->{stats.n_out}, '
                    f'm {stats.m_in}->{stats.m_out}, decided={stats.decided}')
        return KernelResult(instance=kernel, stats=stats, packing=outcome.packing, marking=context)

    # Spostamento di soluzioni

    @staticmethod
    def relocate_solution(kernel: Graph, context: MarkingContext, solution: Iterable[VertexId],
                          y: VertexId) -> Set[VertexId]:
        """
        Sostituisce la parte di una soluzione che cade nelle componenti sotto y con anc(y).

        Args:
            kernel: Grafo del kernel G^
            context: Contesto della marcatura che ha prodotto il kernel
            solution: Soluzione S' di (G^, k)
            y: Vertice di Y

        Returns:
            (S' \\ unione delle C_i) u anc(y), dove le C_i sono le componenti di
            G^ \\ (M u Y) con N(C_i) n Y contenuto in anc(y)

        Raises:
            ParameterError: Se y non appartiene a Y
        """
        y_union = context.table.y_union
        if y not in y_union:
            raise ParameterError(f'vertex {y} is not in Y')
        ancestors = set(context.forest.ancestors(y))
        m_set = set(context.packing.vertex_set)

        absorbed: Set[VertexId] = set()
        for component in kernel.without(m_set | y_union).connected_components():
            if kernel.neighborhood(component) & y_union <= ancestors:
                absorbed |= component
        return (set(solution) - absorbed) | ancestors
