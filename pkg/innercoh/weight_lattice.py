"""
Reticulado de pesos de GL_n.

Um peso é um caractere racional do toro diagonal de GL_n, guardado na base
padrão e_1..e_n com coeficientes racionais exatos. A base fundamental
(gamma_1..gamma_{n-1}, delta) é uma visão derivada:

    a_i = b_i - b_{i+1},    nd = b_1 + ... + b_n,    d = nd / n.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple

from .arith import Rational, check_rank, format_rational, to_rational
from .errors import InvalidInputError, NonIntegralWeightError


@dataclass(frozen=True)
class Weight:
    """Caractere racional do toro diagonal de GL_n na base padrão."""

    n: int
    b: Tuple[Fraction, ...]

    def __post_init__(self):
        check_rank(self.n)
        if len(self.b) != self.n:
            raise InvalidInputError(
                f"esperados {self.n} coeficientes, recebidos {len(self.b)}",
                list(self.b),
            )

    def __str__(self):
        return "(" + ", ".join(format_rational(x) for x in self.b) + ")"


@dataclass(frozen=True)
class FundamentalView:
    """Coordenadas de um peso na base fundamental."""

    a: Tuple[Fraction, ...]
    d: Fraction
    nd: Fraction


def from_standard(n: int, b: Sequence[Rational]) -> Weight:
    """
    Constrói um peso a partir dos coeficientes na base padrão.

    Args:
        n: posto (>= 2)
        b: n racionais (int, Fraction ou "p/q")

    Raises:
        InvalidInputError: se n < 2 ou len(b) != n
    """
    return Weight(n, tuple(to_rational(x) for x in b))


def from_fundamental(n: int, a: Sequence[Rational], d: Rational) -> Weight:
    """
    Constrói um peso a partir de (a_1..a_{n-1}, d).

    Usa nd = n*b_n + sum(i*a_i) para recuperar b_n e depois b_i = b_{i+1} + a_i.
    """
    check_rank(n)
    a = [to_rational(x) for x in a]
    if len(a) != n - 1:
        raise InvalidInputError(f"esperados {n - 1} coeficientes a_i, recebidos {len(a)}", a)
    nd = n * to_rational(d)
    b_last = (nd - sum(i * a_i for i, a_i in enumerate(a, start=1))) / n
    b = [b_last]
    for a_i in reversed(a):
        b.append(b[-1] + a_i)
    return Weight(n, tuple(reversed(b)))


def zero_weight(n: int) -> Weight:
    return from_standard(n, [0] * n)


def determinant_weight(n: int) -> Weight:
    """O caractere determinante delta = e_1 + ... + e_n."""
    return from_standard(n, [1] * n)


def fundamental_view(w: Weight) -> FundamentalView:
    """Coordenadas fundamentais: a_i = b_i - b_{i+1}, nd = soma de b, d = nd/n."""
    a = tuple(w.b[i] - w.b[i + 1] for i in range(w.n - 1))
    nd = sum(w.b, Fraction(0))
    return FundamentalView(a=a, d=nd / w.n, nd=nd)


def _derived_congruence(view: FundamentalView, n: int) -> bool:
    return (view.nd - sum(i * a_i for i, a_i in enumerate(view.a, start=1))) % n == 0


def _printed_congruence(view: FundamentalView, n: int) -> bool:
    return (view.nd - sum(i * (a_i - 1) for i, a_i in enumerate(view.a, start=1))) % n == 0


def is_integral(w: Weight) -> bool:
    """
    Decide a integralidade pelo critério da base fundamental.

    O peso é integral sse todos os a_i e nd são inteiros e
    nd ≡ sum(i*a_i) (mod n). Isso equivale a todos os b_i serem inteiros.
    """
    view = fundamental_view(w)
    if any(a_i.denominator != 1 for a_i in view.a):
        return False
    if view.nd.denominator != 1:
        return False
    return _derived_congruence(view, w.n)


def integrality_diagnostics(w: Weight) -> Dict[str, bool]:
    """
    Expõe as duas formas da congruência de integralidade.

    `derived_congruence` é nd ≡ sum(i*a_i) e decide is_integral;
    `printed_congruence` é a variante nd ≡ sum(i*(a_i - 1)), que difere por
    n(n-1)/2 e só coincide com a primeira para n ímpar.
    """
    view = fundamental_view(w)
    a_integral = all(a_i.denominator == 1 for a_i in view.a)
    nd_integral = view.nd.denominator == 1
    both = a_integral and nd_integral
    return {
        "a_integral": a_integral,
        "nd_integral": nd_integral,
        "derived_congruence": both and _derived_congruence(view, w.n),
        "printed_congruence": both and _printed_congruence(view, w.n),
    }


def is_dominant(w: Weight) -> bool:
    """Dominante sse todos os a_i >= 0, isto é, b_1 >= b_2 >= ... >= b_n."""
    return all(a_i >= 0 for a_i in fundamental_view(w).a)


def central_exponent(w: Weight) -> Fraction:
    """Expoente nd do caractere central z -> z^nd."""
    return fundamental_view(w).nd


def sheaf_is_nonzero(w: Weight) -> bool:
    """
    O feixe de coeficientes é não nulo sse omega(-I_n) = (-1)^nd = 1.

    Raises:
        NonIntegralWeightError: se o peso não for integral
    """
    if not is_integral(w):
        raise NonIntegralWeightError(w)
    nd = central_exponent(w)
    return nd.numerator % 2 == 0


def is_constant_coefficient(w: Weight) -> bool:
    """M_lambda é unidimensional (potência de det) sse todos os a_i = 0."""
    return all(a_i == 0 for a_i in fundamental_view(w).a)


def weight_to_json(w: Weight) -> Dict[str, Any]:
    return {"n": w.n, "b": [format_rational(x) for x in w.b]}


def weight_from_json(data: Dict[str, Any]) -> Weight:
    try:
        return from_standard(int(data["n"]), data["b"])
    except (KeyError, TypeError) as e:
        raise InvalidInputError(f"JSON de peso malformado: {e}")
