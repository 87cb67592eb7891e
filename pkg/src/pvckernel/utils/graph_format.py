# Graph File Format (DIMACS-like)
#
#   c <commento>
#   p edge <n> <m>
#   e <u> <v>        indici 1-based, u != v

from typing import Dict, Iterable, Iterator, Tuple

from ..exceptions import GraphFormatError
from ..models.graph import Graph, VertexId, edge_key


def parse_graph(lines: Iterable[str]) -> Graph:
    """
    Legge un grafo nel formato testuale; l'indice esterno i diventa l'id i-1.

    Args:
        lines: Righe del file (con o senza terminatore)

    Returns:
        Graph con vertici 0..n-1

    Raises:
        GraphFormatError: Con il numero di riga del primo errore
    """
    graph = None
    declared_edges = 0
    seen = set()

    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('c'):
            continue
        parts = line.split()

        if parts[0] == 'p':
            if graph is not None:
                raise GraphFormatError('duplicate header line', line_number)
            if len(parts) != 4 or parts[1] != 'edge':
                raise GraphFormatError("header must read 'p edge <n> <m>'", line_number)
            n, declared_edges = _integers(parts[2:], line_number)
            if n < 0 or declared_edges < 0:
                raise GraphFormatError('vertex and edge counts must be non-negative', line_number)
            graph = Graph.from_edges(n)

        elif parts[0] == 'e':
            if graph is None:
                raise GraphFormatError('edge line before header', line_number)
            if len(parts) != 3:
                raise GraphFormatError("edge line must read 'e <u> <v>'", line_number)
            u, v = _integers(parts[1:], line_number)
            n = graph.next_id
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f'vertex index out of range 1..{n}', line_number)
            if u == v:
                raise GraphFormatError(f'self-loop on vertex {u}', line_number)
            key = edge_key(u - 1, v - 1)
            if key in seen:
                raise GraphFormatError(f'duplicate edge {u} {v}', line_number)
            seen.add(key)
            graph.add_edge(u - 1, v - 1)

        else:
            raise GraphFormatError(f"unknown line type '{parts[0]}'", line_number)

    if graph is None:
        raise GraphFormatError("missing 'p edge <n> <m>' header")
    if graph.num_edges() != declared_edges:
        raise GraphFormatError(f'header declares {declared_edges} edges, found {graph.num_edges()}')
    return graph


def _integers(tokens, line_number) -> Tuple[int, ...]:
    try:
        return tuple(int(token) for token in tokens)
    except ValueError:
        raise GraphFormatError(f'expected integers, got {" ".join(tokens)}', line_number)


def _decoded_lines(handle) -> Iterator[str]:
    for line_number, raw in enumerate(handle, start=1):
        try:
            yield raw.decode('utf-8')
        except UnicodeDecodeError as e:
            raise GraphFormatError(f'invalid UTF-8 byte at offset {e.start}', line_number)


def read_graph(path: str) -> Graph:
    with open(path, 'rb') as handle:
        return parse_graph(_decoded_lines(handle))


def compaction(graph: Graph) -> Dict[VertexId, int]:
    """Mappa id vivi -> indici esterni 1..n in ordine di id."""
    return {v: i for i, v in enumerate(graph.vertices(), start=1)}


def format_graph(graph: Graph) -> str:
    """Serializza il grafo compattando i vertici in 1..n; archi in ordine canonico."""
    index = compaction(graph)
    rows = [f'p edge {graph.num_vertices()} {graph.num_edges()}']
    rows += [f'e {index[u]} {index[v]}' for u, v in graph.edges()]
    return '\n'.join(rows) + '\n'


def write_graph(graph: Graph, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(format_graph(graph))
