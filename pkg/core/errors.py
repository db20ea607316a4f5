"""
Hierarquia de Erros do Pacote
"""
from typing import Any, Optional


class HornError(Exception):
    """Erro base de todas as operações sobre séries de Horn"""

    def with_context(self, context: str) -> "HornError":
        """
        Cópia do erro com a mensagem prefixada por context

        Mantém o tipo e os atributos (violations, result, line...) sem
        chamar __init__ de novo.
        """
        clone = type(self).__new__(type(self))
        clone.__dict__.update(self.__dict__)
        clone.args = (f"{context}: {self}",)
        return clone


class PoleError(HornError, ValueError):
    """Argumento em (ou próximo de) um polo de Γ, ψ ou de um símbolo de Pochhammer"""


class UnknownParameterError(HornError, LookupError):
    """Parâmetro referenciado não existe na série"""

    def __init__(self, name: str, available: Optional[list[str]] = None):
        self.name = name
        self.available = list(available or [])
        msg = f"Parâmetro '{name}' não encontrado na série"
        if self.available:
            msg += f" (disponíveis: {', '.join(self.available)})"
        super().__init__(msg)


class ArityError(HornError, ValueError):
    """Quantidade de parâmetros, variáveis ou coeficientes incompatível com a família"""


class SeriesValidationError(HornError, ValueError):
    """Série mal formada; carrega a lista completa de violações"""

    def __init__(self, violations: list[Any]):
        self.violations = list(violations)
        lines = [f"{v.code}: {v.message}" for v in self.violations]
        super().__init__("Série inválida:\n  " + "\n  ".join(lines))


class NotConvergedError(HornError, ArithmeticError):
    """Soma truncada não atingiu a tolerância pedida"""

    def __init__(self, result: Any, message: Optional[str] = None):
        self.result = result
        super().__init__(
            message
            or (
                f"Série não convergiu após {result.shells_used} camadas "
                f"(cauda estimada {result.tail_estimate:.3e})"
            )
        )


class SpecFormatError(HornError, ValueError):
    """Documento JSON de entrada malformado ou fora do esquema"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (linha {line}, coluna {column})"
        super().__init__(message)
