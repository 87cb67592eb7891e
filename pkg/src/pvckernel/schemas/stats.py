# Kernel Stats Schemas

from marshmallow import Schema, fields


class KernelStatsSchema(Schema):
    """Schema per il record STATS.json di una kernelizzazione."""

    n_in = fields.Integer(required=True)
    m_in = fields.Integer(required=True)
    n_out = fields.Integer(required=True)
    m_out = fields.Integer(required=True)
    d = fields.Integer(required=True)
    k = fields.Integer(required=True)
    k_out = fields.Integer(required=True)
    method = fields.String(required=True)
    decided = fields.String(allow_none=True)

    rule_firings = fields.Dict(keys=fields.String(), values=fields.Integer())
    bound = fields.Integer(allow_none=True)
    bound_satisfied = fields.Boolean(allow_none=True)
    max_degree = fields.Integer()
    degree_bound = fields.Integer(allow_none=True)
    packing_size = fields.Integer()

    # Conteggi per fase di marcatura (kernel generale)
    marks = fields.Dict(keys=fields.String(), values=fields.Dict(keys=fields.String(), values=fields.Integer()))

    # Audit della struttura (kernel per d = 4, 5)
    audit = fields.Dict(keys=fields.String())

    instrumentation = fields.Dict(keys=fields.String(), values=fields.Integer())


kernel_stats_schema = KernelStatsSchema()
