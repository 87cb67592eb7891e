# Decision and Ledger Schemas

from marshmallow import Schema, fields


class DecisionSchema(Schema):
    """Schema per la risposta di un oracolo."""

    yes = fields.Boolean(required=True)
    witness = fields.Method('dump_witness', allow_none=True)

    def dump_witness(self, obj):
        witness = obj.witness if not isinstance(obj, dict) else obj.get('witness')
        return sorted(witness) if witness is not None else None


class LedgerRowSchema(Schema):
    """Schema per una riga del ledger di verify."""

    index = fields.Integer(required=True)
    seed = fields.Integer(required=True)
    n = fields.Integer(required=True)
    m = fields.Integer(required=True)
    d = fields.Integer(required=True)
    k = fields.Integer(required=True)
    method = fields.String(required=True)
    oracle_in = fields.Boolean(required=True)
    oracle_out = fields.Boolean(required=True)
    decided = fields.String(allow_none=True)
    n_out = fields.Integer()
    m_out = fields.Integer()
    agree = fields.Boolean(required=True)
    error = fields.String(allow_none=True)


decision_schema = DecisionSchema()
ledger_row_schema = LedgerRowSchema()
