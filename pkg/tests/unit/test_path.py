# Test Path Engine

import pytest

from src.pvckernel.exceptions import ParameterError
from src.pvckernel.models.packing import PackingStatus
from src.pvckernel.services.oracle_service import OracleService
from src.pvckernel.services.path_service import PathService


class TestFindDPath:
    """Test suite per find_d_path"""

    def test_path_graph(self, path_graph, config):
        path = PathService.find_d_path(path_graph(4), 4, config=config)
        assert path.vertices == (0, 1, 2, 3)

    def test_triangle_has_no_four_path(self, make_graph, config):
        triangle = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert PathService.find_d_path(triangle, 4, config=config) is None

    def test_forbidden_cut_vertex(self, path_graph, config):
        assert PathService.find_d_path(path_graph(4), 3, forbidden={1}, config=config) is None

    def test_first_id_below_last_id(self, random_graphs, config):
        for _, _, _, graph in random_graphs(100, (4, 10), 18, seed=3):
            path = PathService.find_d_path(graph, 4, config=config)
            if path is not None:
                assert path.vertices[0] < path.vertices[-1]
                assert path.is_valid_in(graph)

    @pytest.mark.parametrize('d', [1, 9])
    def test_d_out_of_range(self, path_graph, config, d):
        with pytest.raises(ParameterError):
            PathService.find_d_path(path_graph(3), d, config=config)

    def test_agrees_with_bitmask_search(self, random_graphs, config):
        for _, _, _, graph in random_graphs(200, (2, 11), 20, seed=17):
            for d in (3, 4, 5, 6):
                found = PathService.find_d_path(graph, d, config=config) is not None
                assert found == (not OracleService.is_pd_free(graph, d))


class TestGreedyPacking:
    """Test suite per il packing greedy massimale"""

    def test_edgeless_answers_yes(self, make_graph, config):
        outcome = PathService.greedy_packing(make_graph(5), 4, 2, config)
        assert outcome.status is PackingStatus.YES

    def test_single_path_with_zero_budget_answers_no(self, path_graph, config):
        outcome = PathService.greedy_packing(path_graph(4), 4, 0, config)
        assert outcome.is_no
        assert len(outcome.packing) == 1

    def test_two_disjoint_paths(self, make_graph, config):
        graph = make_graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
        outcome = PathService.greedy_packing(graph, 4, 2, config)
        assert outcome.is_packing
        assert len(outcome.packing) == 2
        assert outcome.packing.vertex_set == frozenset(range(8))

    def test_negative_budget(self, path_graph, config):
        with pytest.raises(ParameterError):
            PathService.greedy_packing(path_graph(4), 4, -1, config)

    def test_packing_is_maximal_and_consistent(self, random_graphs, config):
        for _, _, _, graph in random_graphs(150, (4, 14), 25, seed=5):
            for d, k in ((3, 2), (4, 1), (5, 3)):
                outcome = PathService.greedy_packing(graph, d, k, config)
                if outcome.is_yes:
                    assert OracleService.is_pd_free(graph, d)
                    continue
                packing = outcome.packing
                assert packing.is_consistent()
                assert all(path.is_valid_in(graph) for path in packing.paths)
                if outcome.is_no:
                    assert len(packing) == k + 1
                else:
                    assert 1 <= len(packing) <= k
                    assert OracleService.is_pd_free(graph.without(packing.vertex_set), d)
