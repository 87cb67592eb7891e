# Exceptions


class PvcError(Exception):
    """Errore base del pacchetto."""


class GraphError(PvcError, ValueError):
    """Operazione non valida sul grafo (self-loop, estremo morto, arco mancante)."""


class GraphFormatError(PvcError, ValueError):
    """File grafo malformato."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)


class ParameterError(PvcError, ValueError):
    """Parametro fuori dall'intervallo supportato."""


class ExpansionPreconditionError(PvcError, ValueError):
    """Precondizione del lemma di espansione violata."""

    def __init__(self, clause, message):
        self.clause = clause
        super().__init__(f'{clause}: {message}')


class ObservationViolation(PvcError, AssertionError):
    """Una proprieta' strutturale attesa non vale (matching non massimo, componente non classificabile)."""


class KernelInvariantError(PvcError, AssertionError):
    """Un bound o un invariante asserito del kernel non vale."""
