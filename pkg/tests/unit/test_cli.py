# Test Command Line Interface

import json

import pytest

from src.pvckernel.cli import EXIT_FAILURE, EXIT_FORMAT, EXIT_INVALID, EXIT_KERNEL, EXIT_NO, EXIT_YES, main

FOUR_PATH = 'p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n'


@pytest.fixture
def graph_file(tmp_path):
    """Factory: scrive un file grafo e ne restituisce il path."""
    def _write(text, name='graph.txt'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(*argv):
    return main(['--env', 'testing', *argv])


class TestSolve:
    """Test suite per il sottocomando solve"""

    def test_four_path_budget_zero_is_no(self, graph_file, capsys):
        assert run('solve', '--d', '4', '--k', '0', graph_file(FOUR_PATH)) == EXIT_NO
        assert json.loads(capsys.readouterr().out) == {'yes': False, 'witness': None}

    def test_witness_uses_external_indices(self, graph_file, capsys):
        assert run('solve', '--d', '4', '--k', '1', graph_file(FOUR_PATH)) == EXIT_YES
        payload = json.loads(capsys.readouterr().out)
        assert len(payload['witness']) == 1
        assert 1 <= payload['witness'][0] <= 4

    def test_enumeration_oracle(self, graph_file):
        assert run('solve', '--d', '4', '--k', '1', '--oracle', 'enumeration', graph_file(FOUR_PATH)) == EXIT_YES


class TestKernelize:
    """Test suite per il sottocomando kernelize"""

    def test_edgeless_graph_is_yes(self, graph_file, tmp_path):
        output = tmp_path / 'kernel.txt'
        code = run('kernelize', '--d', '4', '--k', '2', graph_file('p edge 5 0\n'), '-o', str(output))
        assert code == EXIT_YES
        assert output.read_text() == 'p edge 0 0\n'

    def test_kernel_with_stats(self, graph_file, tmp_path):
        output = tmp_path / 'kernel.txt'
        stats = tmp_path / 'STATS.json'
        code = run('kernelize', '--d', '4', '--k', '1', graph_file(FOUR_PATH),
                   '-o', str(output), '--stats', str(stats))
        assert code == EXIT_KERNEL
        assert output.read_text() == FOUR_PATH
        record = json.loads(stats.read_text())
        assert record['method'] == 'small'
        assert record['n_in'] == record['n_out'] == 4
        assert record['bound'] == 96 + 96

    def test_four_path_zero_budget_writes_path(self, graph_file, tmp_path):
        output = tmp_path / 'kernel.txt'
        code = run('kernelize', '--d', '4', '--k', '0', graph_file(FOUR_PATH), '-o', str(output))
        assert code == EXIT_NO
        assert output.read_text() == FOUR_PATH

    def test_general_method(self, graph_file, tmp_path):
        output = tmp_path / 'kernel.txt'
        code = run('kernelize', '--d', '3', '--k', '0', graph_file(FOUR_PATH), '-o', str(output))
        assert code == EXIT_NO

    @pytest.mark.parametrize('extra', [
        ['--d', '9', '--k', '1'],
        ['--d', '4', '--k', '-1'],
        ['--d', '3', '--k', '1', '--method', 'small'],
        ['--d', '2', '--k', '1', '--method', 'general'],
        ['--d', '4', '--k', '1', '--method', 'fast'],
    ])
    def test_invalid_parameters(self, graph_file, tmp_path, extra):
        output = tmp_path / 'kernel.txt'
        assert run('kernelize', *extra, graph_file(FOUR_PATH), '-o', str(output)) == EXIT_INVALID

    def test_malformed_file(self, graph_file, tmp_path, capsys):
        output = tmp_path / 'kernel.txt'
        code = run('kernelize', '--d', '4', '--k', '1', graph_file('p edge 2 1\ne 1 1\n'), '-o', str(output))
        assert code == EXIT_FORMAT
        assert json.loads(capsys.readouterr().err)['line'] == 2

    def test_invalid_utf8_is_format_error(self, tmp_path, capsys):
        source = tmp_path / 'broken.txt'
        source.write_bytes(b'p edge 2 1\ne 1 \xff2\n')
        code = run('kernelize', '--d', '4', '--k', '1', str(source), '-o', str(tmp_path / 'kernel.txt'))
        assert code == EXIT_FORMAT
        assert json.loads(capsys.readouterr().err)['line'] == 2

    def test_missing_file(self, tmp_path):
        code = run('kernelize', '--d', '4', '--k', '1', str(tmp_path / 'missing.txt'), '-o', str(tmp_path / 'out'))
        assert code == EXIT_FAILURE


class TestGen:
    """Test suite per il sottocomando gen"""

    def test_path_to_stdout(self, capsys):
        assert run('gen', 'path', '--n', '4') == EXIT_KERNEL
        assert capsys.readouterr().out == FOUR_PATH

    def test_random_to_file(self, tmp_path):
        output = tmp_path / 'random.txt'
        assert run('gen', 'random', '--n', '6', '--m', '5', '--seed', '3', '-o', str(output)) == EXIT_KERNEL
        assert output.read_text().startswith('p edge 6 5\n')

    def test_vc_transform(self, graph_file, capsys):
        source = graph_file('p edge 2 1\ne 1 2\n')
        assert run('gen', 'vc-transform', '--d', '3', '--input', source) == EXIT_KERNEL
        assert capsys.readouterr().out.startswith('p edge 4 3\n')

    def test_random_requires_edge_count(self):
        assert run('gen', 'random', '--n', '6') == EXIT_INVALID

    def test_impossible_edge_count(self):
        assert run('gen', 'random', '--n', '3', '--m', '4') == EXIT_INVALID


class TestVerify:
    """Test suite per il sottocomando verify"""

    def test_small_kernel_agrees(self, capsys):
        code = run('verify', '--d', '4', '--kmax', '2', '--n', '8', '--count', '5', '--seed', '1')
        assert code == EXIT_KERNEL
        rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert [row['index'] for row in rows] == list(range(5))
        assert all(row['agree'] for row in rows)

    def test_general_kernel_agrees(self, capsys):
        code = run('verify', '--d', '3', '--kmax', '2', '--n', '7', '--count', '4', '--seed', '9')
        assert code == EXIT_KERNEL
        rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert all(row['method'] == 'general' for row in rows)

    def test_too_many_vertices(self, config):
        assert run('verify', '--d', '4', '--kmax', '1', '--n', str(config.MIN_PVC_MAX_VERTICES + 1),
                   '--count', '1') == EXIT_INVALID


class TestAudit:
    """Test suite per il sottocomando audit"""

    def test_four_path(self, graph_file, capsys):
        assert run('audit', '--d', '4', '--k', '1', graph_file(FOUR_PATH)) == EXIT_KERNEL
        record = json.loads(capsys.readouterr().out)
        assert record['audit']['edges_incident_m'] == 3

    def test_already_free(self, graph_file):
        assert run('audit', '--d', '4', '--k', '1', graph_file('p edge 3 2\ne 1 2\ne 2 3\n')) == EXIT_YES

    def test_rejects_general_d(self, graph_file):
        assert run('audit', '--d', '6', '--k', '1', graph_file(FOUR_PATH)) == EXIT_INVALID
