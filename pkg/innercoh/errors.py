"""
Sistema de tratamento de erros para innercoh.

Define as classes de exceção usadas pela biblioteca e pela CLI. Cada classe
carrega o código de saída que a CLI devolve quando ela escapa de um comando:
2 para entrada malformada, 3 para pré-condição matemática violada.
"""

from functools import wraps


EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_DOMAIN = 3
EXIT_SOFTWARE = 70


class InnerCohomologyError(Exception):
    """Classe base para todos os erros do innercoh."""

    exit_code = EXIT_BAD_INPUT

    def __init__(self, message, value=None):
        self.message = message
        self.value = value
        super().__init__(self.format_error())

    def format_error(self):
        """Formata a mensagem de erro indicando o valor problemático."""
        if self.value is not None:
            return f"Valor '{self.value}': {self.message}"
        return self.message


class InvalidInputError(InnerCohomologyError):
    """Entrada malformada (posto < 2, comprimento errado, módulo zero...)."""
    pass


class WeightSpecSyntaxError(InvalidInputError):
    """Erro de sintaxe na especificação de um peso."""
    pass


class NonPrimeRankError(InvalidInputError):
    """Operação que exige posto primo chamada com posto composto."""

    def __init__(self, n):
        super().__init__("o posto n precisa ser primo", n)


class DomainPreconditionError(InnerCohomologyError):
    """Pré-condição matemática violada; `predicate` nomeia o teste que falhou."""

    exit_code = EXIT_DOMAIN
    predicate = None

    def __init__(self, message, value=None, predicate=None):
        if predicate is not None:
            self.predicate = predicate
        super().__init__(message, value)

    def format_error(self):
        base = super().format_error()
        if self.predicate:
            return f"{base} [falhou: {self.predicate}]"
        return base


class NonIntegralWeightError(DomainPreconditionError):
    """O peso não é integral."""

    predicate = "integral"

    def __init__(self, weight):
        super().__init__("o peso não é integral", weight)


class NonDominantWeightError(DomainPreconditionError):
    """O peso não é dominante."""

    predicate = "dominant"

    def __init__(self, weight):
        super().__init__("o peso não é dominante (algum a_i < 0)", weight)


class NonConstantCoefficientError(DomainPreconditionError):
    """O sistema de coeficientes não é constante (algum a_i != 0)."""

    predicate = "constant_coefficient"

    def __init__(self, weight):
        super().__init__("os coeficientes não são constantes (algum a_i != 0)", weight)


class ZeroSheafError(DomainPreconditionError):
    """O feixe de coeficientes é nulo (nd ímpar)."""

    predicate = "sheaf_nonzero"

    def __init__(self, weight):
        super().__init__("o feixe de coeficientes é nulo (nd ímpar)", weight)


def error_handler(func):
    """
    Decorator para capturar e formatar erros de forma consistente.

    Erros do innercoh passam sem modificação; erros aritméticos e de valor
    viram InvalidInputError.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InnerCohomologyError:
            raise
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"Entrada inválida: {e}")
    return wrapper

