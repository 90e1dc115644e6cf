"""
Transformer de especificações de peso usando o padrão Transformer do Lark.

Converte a árvore de parsing em um WeightSpec, que por sua vez constrói o
Weight quando o posto n é conhecido.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from lark import Transformer
from lark.exceptions import VisitError

from .errors import InvalidInputError, WeightSpecSyntaxError
from .parser import Parser
from .weight_lattice import Weight, from_fundamental, from_standard


@dataclass(frozen=True)
class WeightSpec:
    """Peso lido da linha de comando, ainda sem posto associado."""

    basis: str
    values: Tuple[Fraction, ...]
    d: Optional[Fraction] = None

    def to_weight(self, n: int) -> Weight:
        """
        Constrói o peso de posto n.

        Raises:
            InvalidInputError: se a quantidade de coeficientes não bate com n
        """
        if self.basis == "fundamental":
            return from_fundamental(n, self.values, self.d)
        return from_standard(n, self.values)


class WeightSpecTransformer(Transformer):
    """
    Transformer que converte a árvore de parsing do Lark em WeightSpec.

    Cada método corresponde a uma regra da gramática.
    """

    def start(self, items):
        return items[0]

    def standard_spec(self, items):
        """Coeficientes b_1..b_n."""
        return WeightSpec("standard", tuple(items[0]))

    def fundamental_spec(self, items):
        """Coeficientes a_1..a_{n-1} e d."""
        values, d = items
        return WeightSpec("fundamental", tuple(values), d)

    def rational_list(self, items):
        return list(items)

    def rational(self, items):
        return Fraction(items[0].value)


def transform_to_spec(tree) -> WeightSpec:
    """
    Função utilitária para construir o WeightSpec a partir da árvore.

    Raises:
        WeightSpecSyntaxError: denominador zero ou outro valor inválido
    """
    try:
        return WeightSpecTransformer().transform(tree)
    except VisitError as e:
        raise WeightSpecSyntaxError(f"Valor inválido no peso: {e.orig_exc}")


def parse_weight(source: str, n: int, parser: Optional[Parser] = None) -> Weight:
    """Lê uma especificação de peso e constrói o Weight de posto n."""
    spec = transform_to_spec((parser or Parser()).parse(source))
    try:
        return spec.to_weight(n)
    except InvalidInputError as e:
        raise WeightSpecSyntaxError(e.message, source)
