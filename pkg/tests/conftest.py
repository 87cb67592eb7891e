# Test Configuration

import random

import pytest

from src.config import get_config
from src.pvckernel.models.graph import Graph
from src.pvckernel.services.instance_service import InstanceService
from src.pvckernel.services.oracle_service import OracleService


@pytest.fixture
def config():
    """Configurazione di testing (asserzioni interne attive)."""
    return get_config('testing')


@pytest.fixture
def rng():
    """Generatore pseudo-casuale con seme fisso."""
    return random.Random(20240601)


@pytest.fixture
def make_graph():
    """Factory: grafo con vertici 0..n-1 e gli archi indicati."""
    def _make(n, edges=()):
        return Graph.from_edges(n, edges)
    return _make


@pytest.fixture
def path_graph():
    return InstanceService.path


@pytest.fixture
def decide(config):
    """Oracolo di riferimento: True se (G, d, k) e' un'istanza YES."""
    def _decide(graph, d, k):
        return OracleService.solve_branching(graph, d, k, config).yes
    return _decide


def _random_graphs(count, n_range, m_cap, seed):
    sampler = random.Random(seed)
    for _ in range(count):
        n = sampler.randint(*n_range)
        m = sampler.randint(0, min(m_cap, n * (n - 1) // 2))
        instance_seed = sampler.randrange(10 ** 9)
        yield n, m, instance_seed, InstanceService.random_instance(n, m, instance_seed)


@pytest.fixture
def random_graphs():
    """Factory di istanze casuali riproducibili: (n, m, seed, grafo)."""
    return _random_graphs

