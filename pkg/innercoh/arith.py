"""
Utilitários aritméticos exatos compartilhados pelos módulos do innercoh.

Os postos e módulos tratados aqui são pequenos, então primalidade e
fatoração usam divisão por tentativa determinística.
"""

from fractions import Fraction
from typing import Dict, List, Union

from .errors import InvalidInputError, NonPrimeRankError

Rational = Union[int, Fraction, str]


def is_prime(n: int) -> bool:
    """Teste de primalidade por divisão por tentativa."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_rank(n: int) -> None:
    """Rejeita postos que não são inteiros >= 2."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidInputError("o posto n precisa ser um inteiro >= 2", n)


def check_prime(n: int) -> None:
    """Rejeita postos compostos; as regras de classificação só valem para n primo."""
    check_rank(n)
    if not is_prime(n):
        raise NonPrimeRankError(n)


def factorize(n: int) -> Dict[int, int]:
    """
    Fatora n >= 1 em potências de primos.

    Returns:
        dict primo -> expoente, em ordem crescente de primo
    """
    if n < 1:
        raise InvalidInputError("só inteiros positivos podem ser fatorados", n)
    factors: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Função totiente de Euler."""
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> List[int]:
    """Divisores positivos de n em ordem crescente."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def to_rational(value: Rational) -> Fraction:
    """
    Converte int, Fraction ou string "p/q" em Fraction.

    Floats são recusados: toda a aritmética do pacote é exata.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInputError("use inteiros, frações ou strings 'p/q'", value)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InvalidInputError("racional malformado", value)


def format_rational(q: Fraction) -> str:
    """Formata um racional como 'p/q' em termos mínimos (q omitido se 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_int_set(values) -> str:
    """Formata um conjunto de inteiros como '{1,2}' ou '∅'."""
    values = list(values)
    if not values:
        return "∅"
    return "{" + ",".join(str(v) for v in values) + "}"
