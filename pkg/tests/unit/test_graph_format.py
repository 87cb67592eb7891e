# Test Graph File Format

import pytest

from src.pvckernel.exceptions import GraphFormatError
from src.pvckernel.utils.graph_format import (
    compaction,
    format_graph,
    parse_graph,
    read_graph,
    write_graph,
)


class TestParseGraph:
    """Test suite per la lettura del formato testuale"""

    def test_basic_file(self):
        graph = parse_graph(['c un cammino', 'p edge 3 2', 'e 1 2', 'e 2 3'])
        assert graph.vertices() == [0, 1, 2]
        assert graph.edges() == [(0, 1), (1, 2)]

    def test_blank_lines_and_comments(self):
        graph = parse_graph(['', 'c', 'p edge 2 1', '   ', 'c fine', 'e 2 1'])
        assert graph.edges() == [(0, 1)]

    def test_empty_graph(self):
        graph = parse_graph(['p edge 0 0'])
        assert graph.num_vertices() == 0

    @pytest.mark.parametrize('lines,line_number', [
        (['p edge 2 0', 'p edge 2 0'], 2),
        (['p vertex 2 0'], 1),
        (['p edge 2'], 1),
        (['e 1 2'], 1),
        (['p edge 2 1', 'e 1'], 2),
        (['p edge 2 1', 'e 1 x'], 2),
        (['p edge 2 1', 'e 1 3'], 2),
        (['p edge 2 1', 'e 0 1'], 2),
        (['p edge 2 1', 'e 2 2'], 2),
        (['p edge 3 2', 'e 1 2', 'e 2 1'], 3),
        (['p edge 2 0', 'x 1 2'], 2),
        (['p edge -1 0'], 1),
    ])
    def test_errors_carry_line_number(self, lines, line_number):
        with pytest.raises(GraphFormatError) as error:
            parse_graph(lines)
        assert error.value.line_number == line_number
        assert str(error.value).startswith(f'line {line_number}:')

    def test_missing_header(self):
        with pytest.raises(GraphFormatError) as error:
            parse_graph(['c solo commenti'])
        assert error.value.line_number is None

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphFormatError):
            parse_graph(['p edge 3 2', 'e 1 2'])


class TestFormatGraph:
    """Test suite per la scrittura con compattazione"""

    def test_canonical_file_round_trip(self, tmp_path):
        text = 'p edge 4 3\ne 1 2\ne 1 4\ne 2 3\n'
        source = tmp_path / 'in.txt'
        source.write_text(text)
        target = tmp_path / 'out.txt'
        write_graph(read_graph(str(source)), str(target))
        assert target.read_text() == text

    def test_compaction_after_deletions(self, path_graph):
        graph = path_graph(5)
        graph.delete_vertex(0)
        graph.delete_vertex(2)
        assert compaction(graph) == {1: 1, 3: 2, 4: 3}
        assert format_graph(graph) == 'p edge 3 1\ne 2 3\n'

    def test_isolated_vertices_survive(self, make_graph):
        text = format_graph(make_graph(3, [(0, 2)]))
        assert text == 'p edge 3 1\ne 1 3\n'
        assert parse_graph(text.splitlines()).num_vertices() == 3


class TestReadGraph:
    """Test suite per la lettura da file"""

    def test_invalid_utf8_reports_line(self, tmp_path):
        source = tmp_path / 'broken.txt'
        source.write_bytes(b'p edge 2 1\ne 1 \xff2\n')
        with pytest.raises(GraphFormatError) as error:
            read_graph(str(source))
        assert error.value.line_number == 2

    def test_windows_line_endings(self, tmp_path):
        source = tmp_path / 'crlf.txt'
        source.write_bytes(b'p edge 2 1\r\ne 1 2\r\n')
        assert read_graph(str(source)).edges() == [(0, 1)]
