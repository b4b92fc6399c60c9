"""
Exceções do crossdim
"""


class CrossDimError(Exception):
    """Erro base da biblioteca"""


class InvalidValueError(CrossDimError, ValueError):
    """Entrada inválida: NaN/Inf, dimensões incompatíveis, parâmetro fora da faixa"""


class DimensionOverflowError(CrossDimError):
    """Dimensão resultante não cabe no inteiro da plataforma"""


class NumericalError(CrossDimError):
    """Falha numérica (SVD sem convergência, integração divergente)"""


class ProjectionError(NumericalError):
    """Matriz normal singular ao projetar um sistema"""


class NotInvariantError(CrossDimError):
    """Dimensão não é invariante sob o produto MV-2"""


class LiftError(CrossDimError):
    """Não existe levantamento da classe na dimensão pedida"""

    def __init__(self, message, admissible):
        super().__init__(message)
        # dimensões admissíveis são os múltiplos deste valor
        self.admissible = admissible


class TransienceError(CrossDimError):
    """Transiente de dimensão não realizável"""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class PhaseBoundaryError(CrossDimError):
    """Estado na fronteira entre fases fora da tolerância"""

    def __init__(self, message, mismatch):
        super().__init__(message)
        self.mismatch = mismatch


class ScenarioError(CrossDimError):
    """Arquivo de cenário inválido; carrega a lista completa de erros"""

    def __init__(self, errors):
        self.errors = list(errors)
        first = self.errors[0]['mensagem'] if self.errors else 'cenário inválido'
        super().__init__(f"{len(self.errors)} erro(s) no cenário: {first}")


class LiteralError(ScenarioError):
    """Literal de matriz inválido; carrega os erros léxicos, sintáticos e semânticos"""
