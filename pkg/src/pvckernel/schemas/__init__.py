# Schemas Package

from .decision import (
    decision_schema,
    ledger_row_schema
)

from .params import (
    kernelize_params_schema,
    solve_params_schema,
    verify_params_schema,
    gen_params_schema,
    audit_params_schema,
    resolve_method,
    load_params
)

from .stats import kernel_stats_schema

__all__ = [
    'decision_schema',
    'ledger_row_schema',
    'kernelize_params_schema',
    'solve_params_schema',
    'verify_params_schema',
    'gen_params_schema',
    'audit_params_schema',
    'resolve_method',
    'load_params',
    'kernel_stats_schema',
]
