# CLI Parameter Schemas

from marshmallow import Schema, ValidationError, fields, validate, validates, validates_schema

from src.config import get_config

METHODS = ('small', 'general', 'auto')
GENERATORS = ('random', 'path', 'star', 'triangle', 'distar', 'star-triangle', 'pendant-matching', 'vc-transform')


def resolve_method(method, d, config=None):
    """auto sceglie small per d in {4, 5}, general altrimenti."""
    config = config or get_config()
    if method == 'auto':
        return 'small' if d in config.SMALL_KERNEL_D else 'general'
    return method


class _ConfigSchema(Schema):
    """I limiti vengono letti dalla config nel context al momento del load."""

    @property
    def config(self):
        return self.context.get('config') or get_config()

    def _check_d(self, value, low=None):
        config = self.config
        low = config.MIN_D if low is None else low
        if value is not None and not low <= value <= config.MAX_D:
            raise ValidationError(f'Must be greater than or equal to {low} and less than or equal to {config.MAX_D}.')


class _KernelMethodMixin:

    @validates('d')
    def validate_d(self, value):
        self._check_d(value)

    @validates_schema
    def validate_method(self, data, **kwargs):
        config = self.config
        d = data.get('d')
        method = resolve_method(data.get('method', 'auto'), d, config)
        if method == 'small' and d not in config.SMALL_KERNEL_D:
            raise ValidationError(f'small kernel supports d in {list(config.SMALL_KERNEL_D)}', 'd')
        if method == 'general' and d is not None and d < config.GENERAL_MIN_D:
            raise ValidationError(f'general kernel requires d >= {config.GENERAL_MIN_D}', 'd')


class KernelizeParamsSchema(_KernelMethodMixin, _ConfigSchema):
    """Schema per i parametri di kernelize."""

    d = fields.Integer(required=True)
    k = fields.Integer(required=True, validate=validate.Range(min=0))
    method = fields.String(load_default='auto', validate=validate.OneOf(METHODS))
    input = fields.String(required=True, validate=validate.Length(min=1))
    output = fields.String(required=True, validate=validate.Length(min=1))
    stats = fields.String(load_default=None, allow_none=True)


class SolveParamsSchema(_ConfigSchema):
    """Schema per i parametri di solve."""

    d = fields.Integer(required=True)
    k = fields.Integer(required=True, validate=validate.Range(min=0))
    input = fields.String(required=True, validate=validate.Length(min=1))
    oracle = fields.String(load_default='branching', validate=validate.OneOf(('branching', 'enumeration')))

    @validates('d')
    def validate_d(self, value):
        self._check_d(value)


class VerifyParamsSchema(_KernelMethodMixin, _ConfigSchema):
    """Schema per i parametri di verify."""

    d = fields.Integer(required=True)
    kmax = fields.Integer(required=True, validate=validate.Range(min=0))
    n = fields.Integer(required=True, validate=validate.Range(min=1))
    m = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=0))
    count = fields.Integer(required=True, validate=validate.Range(min=1))
    seed = fields.Integer(load_default=0)
    method = fields.String(load_default='auto', validate=validate.OneOf(METHODS))
    workers = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))

    @validates('n')
    def validate_n(self, value):
        limit = self.config.MIN_PVC_MAX_VERTICES
        if value > limit:
            raise ValidationError(f'oracle supports at most {limit} vertices')

    @validates_schema
    def validate_edges(self, data, **kwargs):
        m, n = data.get('m'), data.get('n')
        if m is not None and n is not None and m > n * (n - 1) // 2:
            raise ValidationError(f'm={m} impossible on {n} vertices', 'm')


class GenParamsSchema(_ConfigSchema):
    """Schema per i parametri di gen."""

    kind = fields.String(required=True, validate=validate.OneOf(GENERATORS))
    n = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=0))
    m = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=0))
    seed = fields.Integer(load_default=0)
    p = fields.Integer(load_default=0, validate=validate.Range(min=0))
    q = fields.Integer(load_default=0, validate=validate.Range(min=0))
    count = fields.Integer(load_default=0, validate=validate.Range(min=0))
    d = fields.Integer(load_default=None, allow_none=True)
    input = fields.String(load_default=None, allow_none=True)
    output = fields.String(load_default=None, allow_none=True)

    @validates('d')
    def validate_d(self, value):
        self._check_d(value, low=3)

    @validates_schema
    def validate_kind(self, data, **kwargs):
        kind = data.get('kind')
        if kind == 'random' and (data.get('n') is None or data.get('m') is None):
            raise ValidationError('random requires --n and --m', 'kind')
        if kind == 'path' and data.get('n') is None:
            raise ValidationError('path requires --n', 'kind')
        if kind == 'vc-transform' and (data.get('d') is None or not data.get('input')):
            raise ValidationError('vc-transform requires --d and an input graph', 'kind')


class AuditParamsSchema(_ConfigSchema):
    """Schema per i parametri di audit."""

    d = fields.Integer(required=True)
    k = fields.Integer(required=True, validate=validate.Range(min=0))
    input = fields.String(required=True, validate=validate.Length(min=1))

    @validates('d')
    def validate_d(self, value):
        if value not in self.config.SMALL_KERNEL_D:
            raise ValidationError(f'Must be one of: {", ".join(map(str, self.config.SMALL_KERNEL_D))}.')


def load_params(schema, data, config):
    """Valida data con i limiti della config selezionata (--env)."""
    schema.context = {'config': config}
    return schema.load(data)


kernelize_params_schema = KernelizeParamsSchema()
solve_params_schema = SolveParamsSchema()
verify_params_schema = VerifyParamsSchema()
gen_params_schema = GenParamsSchema()
audit_params_schema = AuditParamsSchema()
