# Test Parameter Schemas

import pytest
from marshmallow import ValidationError

import src.config as config_module
from src.config import TestingConfig
from src.pvckernel.cli import EXIT_INVALID, EXIT_NO, main
from src.pvckernel.schemas import (
    audit_params_schema,
    kernelize_params_schema,
    load_params,
    resolve_method,
    verify_params_schema,
)


class NarrowConfig(TestingConfig):
    MAX_D = 4
    MIN_PVC_MAX_VERTICES = 6
    SMALL_KERNEL_D = (4,)


def kernelize_params(d):
    return {'d': d, 'k': 1, 'input': 'in.txt', 'output': 'out.txt'}


class TestConfigLimits:
    """I limiti dei parametri seguono la config passata al load"""

    def test_max_d_follows_config(self):
        assert load_params(kernelize_params_schema, kernelize_params(5), TestingConfig)['d'] == 5
        with pytest.raises(ValidationError) as error:
            load_params(kernelize_params_schema, kernelize_params(5), NarrowConfig)
        assert 'd' in error.value.messages

    def test_oracle_vertex_limit_follows_config(self):
        params = {'d': 4, 'kmax': 1, 'n': 7, 'count': 1}
        assert load_params(verify_params_schema, params, TestingConfig)['n'] == 7
        with pytest.raises(ValidationError) as error:
            load_params(verify_params_schema, params, NarrowConfig)
        assert 'n' in error.value.messages

    def test_small_kernel_d_follows_config(self):
        params = {'d': 5, 'k': 1, 'input': 'in.txt'}
        assert load_params(audit_params_schema, params, TestingConfig)['d'] == 5
        with pytest.raises(ValidationError):
            load_params(audit_params_schema, params, NarrowConfig)

    def test_resolve_method(self):
        assert resolve_method('auto', 5, TestingConfig) == 'small'
        assert resolve_method('auto', 5, NarrowConfig) == 'general'
        assert resolve_method('general', 4, NarrowConfig) == 'general'

    def test_env_option_reaches_schemas(self, tmp_path, monkeypatch):
        monkeypatch.setitem(config_module.config, 'narrow', NarrowConfig)
        source = tmp_path / 'graph.txt'
        source.write_text('p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n')
        output = str(tmp_path / 'kernel.txt')
        assert main(['--env', 'testing', 'kernelize', '--d', '5', '--k', '0', str(source), '-o', output]) == EXIT_NO
        assert main(['--env', 'narrow', 'kernelize', '--d', '5', '--k', '0', str(source), '-o', output]) == EXIT_INVALID
