# Expansion Certificate Model

from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, List

from .graph import Graph, VertexId


@dataclass(frozen=True)
class ExpansionCertificate:
    """q-espansione di A' in B' con N(B') contenuto in A'."""

    q: int
    a_prime: FrozenSet[VertexId]
    b_prime: FrozenSet[VertexId]
    edges: FrozenSet[tuple]  # coppie (a, b) con a in A', b in B'

    def partners(self, a: VertexId) -> List[VertexId]:
        """Q_a: i q vertici di B' assegnati ad a."""
        return sorted(b for x, b in self.edges if x == a)

    def violations(self, bipartite: Graph) -> List[str]:
        """Elenco delle proprieta' violate (vuoto se il certificato e' valido)."""
        problems = []
        if not self.a_prime:
            problems.append('empty A_prime')

        incidence = Counter(a for a, _ in self.edges)
        for a in self.a_prime:
            if incidence[a] != self.q:
                problems.append(f'vertex {a} incident to {incidence[a]} edges of Q')
        for a, b in self.edges:
            if a not in self.a_prime or b not in self.b_prime:
                problems.append(f'edge ({a}, {b}) leaves A_prime x B_prime')
            elif not bipartite.has_edge(a, b):
                problems.append(f'edge ({a}, {b}) not in host graph')

        saturated = {b for _, b in self.edges}
        if len(saturated) != self.q * len(self.a_prime) or len(self.edges) != len(saturated):
            problems.append(f'Q saturates {len(saturated)} vertices, expected {self.q * len(self.a_prime)}')

        outside = bipartite.neighborhood(self.b_prime) - self.a_prime
        if outside:
            problems.append(f'N(B_prime) leaves A_prime: {sorted(outside)}')
        return problems

    def is_valid(self, bipartite: Graph) -> bool:
        return not self.violations(bipartite)
