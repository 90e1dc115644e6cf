"""
Cohomologia (g, K_inf) com coeficientes constantes.

H*(g, K_inf, C) ≅ H*(SU(n)/SO(n), C) é uma álgebra exterior com um gerador
em cada grau de S0 = {2l - 1 : 1 < l <= n, l ímpar}. O polinômio de Poincaré
é o produto dos fatores (1 + t^s); a enumeração de subconjuntos serve de
oráculo independente.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from typing import Dict, Tuple

from .arith import check_rank
from .errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorDegrees:
    """Graus dos geradores da álgebra exterior (o conjunto S0)."""

    n: int
    degrees: Tuple[int, ...]

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __contains__(self, k):
        return k in self.degrees


@dataclass(frozen=True)
class PoincarePolynomial:
    """
    Polinômio inteiro em t; coeffs[k] é o número de Betti b_k.

    Os coeficientes são guardados densos, de grau 0 até o grau máximo.
    """

    coeffs: Tuple[int, ...]

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    @property
    def top_degree(self) -> int:
        return len(self.coeffs) - 1

    def total_dimension(self) -> int:
        """Valor em t = 1, isto é, a soma dos números de Betti."""
        return sum(self.coeffs)

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                product[i + j] += x * y
        return PoincarePolynomial(tuple(product))

    def as_dict(self) -> Dict[str, int]:
        """Mapa grau -> b_k (só graus com b_k != 0), chaves string em ordem crescente."""
        return {str(k): c for k, c in enumerate(self.coeffs) if c}

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            monomial = "t" if k == 1 else f"t^{k}"
            terms.append(monomial if c == 1 else f"{c}{monomial}")
        return " + ".join(terms) if terms else "0"


ONE = PoincarePolynomial((1,))


def _one_plus_t_power(s: int) -> PoincarePolynomial:
    return PoincarePolynomial((1,) + (0,) * (s - 1) + (1,))


def generator_degrees(n: int) -> GeneratorDegrees:
    """Retorna S0 = {2l - 1 : 1 < l <= n, l ímpar}; vazio exatamente para n = 2."""
    check_rank(n)
    return GeneratorDegrees(n, tuple(2 * l - 1 for l in range(3, n + 1, 2)))


@lru_cache(maxsize=None, typed=True)
def poincare_polynomial(n: int) -> PoincarePolynomial:
    """Produto de (1 + t^s) sobre s em S0."""
    s0 = generator_degrees(n)
    return reduce(lambda acc, s: acc * _one_plus_t_power(s), s0, ONE)


def poincare_polynomial_with_circle(n: int) -> PoincarePolynomial:
    """
    Números de Betti de H*(gl_n, O(n), C): o fator do círculo H*(U(1))
    contribui (1 + t).
    """
    return _one_plus_t_power(1) * poincare_polynomial(n)


def betti(n: int, k: int) -> int:
    """Coeficiente de t^k no polinômio de Poincaré; 0 fora do suporte."""
    if k < 0:
        raise InvalidInputError("o grau k precisa ser >= 0", k)
    return poincare_polynomial(n).coefficient(k)


@lru_cache(maxsize=None)
def _subset_sum_counts(n: int) -> Counter:
    degrees = generator_degrees(n).degrees
    logger.debug("enumerando %d subconjuntos de S0 para n=%d", 2 ** len(degrees), n)
    counts = Counter()
    for size in range(len(degrees) + 1):
        for subset in combinations(degrees, size):
            counts[sum(subset)] += 1
    return counts


def oracle_betti(n: int, k: int) -> int:
    """Conta os subconjuntos de S0 cuja soma é k, por enumeração explícita."""
    check_rank(n)
    return _subset_sum_counts(n)[k]
