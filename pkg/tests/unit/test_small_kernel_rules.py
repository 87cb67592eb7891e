# Test Small Kernel Rules

import pytest

from src.pvckernel.exceptions import ObservationViolation, ParameterError
from src.pvckernel.models.graph import Graph
from src.pvckernel.models.instance import (
    ComponentRemoved,
    DegreeOneTwinDeleted,
    HighDegreeVertexDeleted,
    PvcInstance,
    Verdict,
)
from src.pvckernel.models.matching import AdjacentMatching, Matching
from src.pvckernel.services.audit_service import AuditService
from src.pvckernel.services.instance_service import InstanceService
from src.pvckernel.services.small_kernel_service import SmallKernelService


def rule_four_gadget(x_count=6):
    """v=0 adiacente ad a1=1 (accoppiato con b1=2) e a x_count vertici che vedono solo a1."""
    graph = Graph.from_edges(3, [(0, 1), (1, 2)])
    for _ in range(x_count):
        x = graph.add_vertex()
        graph.add_edge(0, x)
        graph.add_edge(1, x)
    return graph


class TestRuleComponent:
    """Test suite per la rimozione di componenti P_d-free"""

    def test_triangle_next_to_five_path(self, config):
        graph = Graph.from_edges(8, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7)])
        inst = PvcInstance(graph, d=5, k=1)
        event = SmallKernelService.rule_component(inst, config)
        assert event == ComponentRemoved(frozenset({0, 1, 2}))
        assert graph.vertices() == [3, 4, 5, 6, 7]

    def test_single_four_path_kept(self, path_graph, config):
        assert SmallKernelService.rule_component(PvcInstance(path_graph(4), d=4, k=0), config) is None

    def test_isolated_vertices_one_per_call(self, make_graph, config):
        inst = PvcInstance(make_graph(2), d=4, k=0)
        assert SmallKernelService.rule_component(inst, config).vertices == frozenset({0})
        assert SmallKernelService.rule_component(inst, config).vertices == frozenset({1})
        assert SmallKernelService.rule_component(inst, config) is None


class TestRuleDegreeOne:
    """Test suite per i gemelli di grado uno"""

    def test_star_keeps_two_leaves(self, config):
        inst = PvcInstance(InstanceService.star(3), d=4, k=1)
        assert SmallKernelService.rule_degree_one(inst, config) == DegreeOneTwinDeleted(x=3, v=0)
        assert inst.graph.degree(0) == 2
        assert SmallKernelService.rule_degree_one(inst, config) == DegreeOneTwinDeleted(x=2, v=0)

    def test_three_path_loses_a_leaf(self, path_graph, config):
        inst = PvcInstance(path_graph(3), d=4, k=0)
        assert SmallKernelService.rule_degree_one(inst, config) == DegreeOneTwinDeleted(x=2, v=1)

    def test_perfect_matching_untouched(self, make_graph, config):
        inst = PvcInstance(make_graph(4, [(0, 1), (2, 3)]), d=4, k=0)
        assert SmallKernelService.rule_degree_one(inst, config) is None


class TestRuleMatching:
    """Test suite per la regola del matching adiacente"""

    def test_zero_budget_decides_no(self, config):
        inst = PvcInstance(InstanceService.pendant_matching_gadget(2), d=5, k=0)
        event = SmallKernelService.rule_matching(inst, config)
        assert event.v == 0
        assert event.matching_size == 2
        assert inst.verdict is Verdict.NO
        assert inst.k == 0

    def test_budget_one_no_trigger(self, config):
        inst = PvcInstance(InstanceService.pendant_matching_gadget(2), d=5, k=1)
        assert SmallKernelService.rule_matching(inst, config) is None

    def test_decrements_budget(self, config):
        inst = PvcInstance(InstanceService.pendant_matching_gadget(3), d=4, k=1)
        event = SmallKernelService.rule_matching(inst, config)
        assert event.v == 0
        assert inst.k == 0
        assert 0 not in inst.graph

    def test_isolated_vertex(self, make_graph, config):
        assert SmallKernelService.rule_matching(PvcInstance(make_graph(1), d=4, k=0), config) is None

    def test_rejects_small_d(self, path_graph, config):
        with pytest.raises(ParameterError):
            SmallKernelService.rule_matching(PvcInstance(path_graph(3), d=3, k=0), config)


class TestClassifyX:
    """Test suite per la partizione X0, X1, X2"""

    def test_pendant_leaf_is_x0(self, make_graph):
        inst = PvcInstance(make_graph(2, [(0, 1)]), d=4, k=0)
        partition = SmallKernelService.classify_x(inst, 0, AdjacentMatching(center=0, matching=Matching()))
        assert partition.x0 == frozenset({1})
        assert not partition.x1 and not partition.x2

    def test_one_matched_endpoint_is_x1(self, make_graph):
        inst = PvcInstance(make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)]), d=4, k=0)
        adjacent = AdjacentMatching(center=0, matching=Matching.from_pairs([(2, 3)]), oriented=((2, 3),))
        partition = SmallKernelService.classify_x(inst, 0, adjacent)
        assert partition.x1 == frozenset({1})
        assert partition.m1 == frozenset({2})

    def test_dominating_vertex_is_x2(self, make_graph):
        inst = PvcInstance(make_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3), (0, 2)]), d=4, k=0)
        adjacent = AdjacentMatching(center=0, matching=Matching.from_pairs([(2, 3)]), oriented=((2, 3),))
        partition = SmallKernelService.classify_x(inst, 0, adjacent)
        assert partition.x2 == frozenset({1})

    def test_non_maximum_matching_detected(self, make_graph):
        # x=1 vede a=2, y=4 vede b=3: il matching {2-3} non e' massimo
        inst = PvcInstance(make_graph(5, [(0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (3, 4)]), d=4, k=1)
        adjacent = AdjacentMatching(center=0, matching=Matching.from_pairs([(2, 3)]), oriented=((2, 3),))
        with pytest.raises(ObservationViolation):
            SmallKernelService.classify_x(inst, 0, adjacent)


class TestRuleExpansion:
    """Test suite per la regola dell'espansione"""

    def test_below_threshold(self, path_graph, config):
        assert SmallKernelService.rule_expansion(PvcInstance(path_graph(5), d=4, k=0), config) is None

    def test_gadget_loses_one_edge(self, config, decide):
        graph = rule_four_gadget()
        before = decide(graph, 4, 0)
        inst = PvcInstance(graph.copy(), d=4, k=0)
        event = SmallKernelService.rule_expansion(inst, config)
        assert event.v == 0
        assert event.x in range(3, 9)
        assert not inst.graph.has_edge(event.x, 0)
        assert inst.graph.num_edges() == graph.num_edges() - 1
        assert decide(inst.graph, 4, 0) == before


class TestKernelizeSmall:
    """Test suite per la pipeline completa"""

    def test_edgeless_is_yes_with_empty_kernel(self, make_graph, config):
        result = SmallKernelService.kernelize_small(PvcInstance(make_graph(4), d=4, k=0), config)
        assert result.verdict is Verdict.YES
        assert result.instance.graph.num_vertices() == 0

    def test_path_with_zero_budget(self, path_graph, config):
        # le regole lasciano P_4 intatto; il NO arriva dal packing finale
        result = SmallKernelService.kernelize_small(PvcInstance(path_graph(4), d=4, k=0), config)
        assert len(result.trace) == 0
        assert result.instance.graph == path_graph(4)
        assert result.instance.k == 0
        assert result.verdict is Verdict.NO
        assert result.stats.decided == Verdict.NO.value
        assert result.stats.packing_size == 1

    def test_five_path_zero_budget_decided_by_matching_rule(self, path_graph, config):
        # il centro 2 ha il matching adiacente {1-0, 3-4} di dimensione k+2
        result = SmallKernelService.kernelize_small(PvcInstance(path_graph(5), d=5, k=0), config)
        assert result.verdict is Verdict.NO
        assert result.trace.events[0] == HighDegreeVertexDeleted(v=2, matching_size=2)
        assert 2 not in result.instance.graph
        assert result.stats.packing_size == 0

    def test_input_is_not_mutated(self, config):
        graph = InstanceService.star(5)
        SmallKernelService.kernelize_small(PvcInstance(graph, d=4, k=1), config)
        assert graph == InstanceService.star(5)

    def test_rejects_unsupported_d(self, path_graph, config):
        with pytest.raises(ParameterError):
            SmallKernelService.kernelize_small(PvcInstance(path_graph(4), d=6, k=1), config)

    def test_stats_record(self, config):
        graph = InstanceService.pendant_matching_gadget(2, base=InstanceService.star(4), v=1)
        result = SmallKernelService.kernelize_small(PvcInstance(graph, d=4, k=2), config)
        stats = result.stats
        assert stats.method == 'small'
        assert stats.n_in == graph.num_vertices()
        assert stats.m_in == graph.num_edges()
        assert stats.n_out == result.instance.graph.num_vertices()
        assert set(stats.rule_firings) == {'component', 'degree_one', 'matching', 'expansion'}
        assert sum(stats.rule_firings.values()) <= len(result.trace)


class TestAuditClassification:
    """Test suite per la classificazione delle componenti"""

    def test_triangle_for_d4(self):
        assert AuditService.classify_component(InstanceService.triangle(), {0, 1, 2}, 4) == 'triangle'

    def test_star_for_d4(self):
        assert AuditService.classify_component(InstanceService.star(5), set(range(6)), 4) == 'star'

    def test_di_star_for_d5(self):
        assert AuditService.classify_component(InstanceService.di_star(2, 2), set(range(6)), 5) == 'di_star'

    def test_small_component_for_d5(self, path_graph):
        assert AuditService.classify_component(path_graph(4), set(range(4)), 5) == 'small'

    def test_four_path_fails_for_d4(self, path_graph):
        with pytest.raises(ObservationViolation):
            AuditService.classify_component(path_graph(4), set(range(4)), 4)

    def test_size_bounds(self):
        assert AuditService.size_bounds(4, 2)['total'] == 96 * 4 + 96 * 2
        assert AuditService.size_bounds(5, 1)['total'] == 490
