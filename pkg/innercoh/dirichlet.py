"""
Grupo de caracteres de Dirichlet de (Z/NZ)^×.

O grupo de unidades é decomposto em fatores cíclicos via CRT e raízes
primitivas; um caractere é um vetor de expoentes contra esses geradores, e
seus valores são guardados como frações de volta q em [0, 1) (o valor é
exp(2πi·q)). Nenhum número complexo em ponto flutuante é usado.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional, Tuple

from .arith import euler_phi, factorize
from .errors import InvalidInputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalBlock:
    """Parte p-primária do grupo de unidades: os fatores de índice `indices`."""

    prime: int
    exponent: int
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class UnitGroupStructure:
    """
    Decomposição de (Z/NZ)^× em soma direta interna de cíclicos.

    `factors` lista pares (gerador mod N, ordem); `dlog` leva cada unidade
    ao seu vetor de expoentes e é construída uma única vez.
    """

    modulus: int
    factors: Tuple[Tuple[int, int], ...]
    blocks: Tuple[LocalBlock, ...] = field(repr=False)
    dlog: Mapping[int, Tuple[int, ...]] = field(repr=False, compare=False, hash=False)

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(order for _, order in self.factors)

    @property
    def order(self) -> int:
        """Ordem do grupo, igual a phi(N)."""
        result = 1
        for order in self.orders:
            result *= order
        return result

    def units(self) -> List[int]:
        return sorted(self.dlog)


def _multiplicative_order(g: int, m: int) -> int:
    k, x = 1, g % m
    while x != 1 % m:
        x = x * g % m
        k += 1
    return k


def _primitive_root(p: int, k: int) -> int:
    """Menor raiz primitiva módulo p^k (p ímpar), por busca exaustiva."""
    m = p ** k
    phi = m // p * (p - 1)
    for g in range(2, m):
        if g % p and _multiplicative_order(g, m) == phi:
            return g
    raise InvalidInputError("sem raiz primitiva", m)


def _crt_lift(residue: int, local: int, modulus: int) -> int:
    """Elemento x mod N com x ≡ residue (mod local) e x ≡ 1 fora dele."""
    other = modulus // local
    if other == 1:
        return residue % modulus
    # x = 1 + other * t  com  1 + other * t ≡ residue (mod local)
    t = (residue - 1) * pow(other, -1, local) % local
    return (1 + other * t) % modulus


@lru_cache(maxsize=None)
def unit_group_structure(N: int) -> UnitGroupStructure:
    """
    Decompõe (Z/NZ)^×.

    Potências de primo ímpar contribuem um cíclico de ordem phi(p^k); 2 não
    contribui nada; 4 contribui C2; 2^k (k >= 3) contribui C2 × C_{2^(k-2)}
    gerado por -1 e 5.
    """
    if not isinstance(N, int) or N < 1:
        raise InvalidInputError("o módulo N precisa ser um inteiro >= 1", N)

    factors: List[Tuple[int, int]] = []
    blocks: List[LocalBlock] = []
    for p, k in factorize(N).items():
        local = p ** k
        start = len(factors)
        if p == 2:
            if k == 2:
                factors.append((_crt_lift(-1, local, N), 2))
            elif k >= 3:
                factors.append((_crt_lift(-1, local, N), 2))
                factors.append((_crt_lift(5, local, N), 2 ** (k - 2)))
        else:
            g = _primitive_root(p, k)
            factors.append((_crt_lift(g, local, N), local // p * (p - 1)))
        blocks.append(LocalBlock(p, k, tuple(range(start, len(factors)))))

    dlog: Dict[int, Tuple[int, ...]] = {}
    for exponents in product(*(range(order) for _, order in factors)):
        unit = 1 % N
        for (g, _), e in zip(factors, exponents):
            unit = unit * pow(g, e, N) % N
        dlog[unit] = exponents
    logger.debug("estrutura de (Z/%dZ)^x: fatores %s", N, factors)
    return UnitGroupStructure(N, tuple(factors), tuple(blocks), MappingProxyType(dlog))


@dataclass(frozen=True)
class DirichletCharacter:
    """
    Caractere de Dirichlet mod N dado por expoentes contra os geradores.

    chi(g_i) = exp(2πi · exponents[i] / order_i).
    """

    group: UnitGroupStructure = field(repr=False)
    exponents: Tuple[int, ...]

    def __post_init__(self):
        orders = self.group.orders
        if len(self.exponents) != len(orders):
            raise InvalidInputError(
                f"esperados {len(orders)} expoentes para o módulo {self.group.modulus}",
                list(self.exponents),
            )
        if any(not 0 <= e < o for e, o in zip(self.exponents, orders)):
            raise InvalidInputError("expoente fora de [0, ordem)", list(self.exponents))

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def values(self) -> Tuple[Fraction, ...]:
        """Valores nos geradores, como frações de volta."""
        return tuple(Fraction(e, o) for e, o in zip(self.exponents, self.group.orders))

    @property
    def order(self) -> int:
        return lcm(1, *(o // gcd(o, e) for e, o in zip(self.exponents, self.group.orders)))

    @property
    def is_principal(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.group.modulus != self.group.modulus:
            raise InvalidInputError("caracteres de módulos diferentes", other.modulus)
        return DirichletCharacter(
            self.group,
            tuple((x + y) % o for x, y, o in zip(self.exponents, other.exponents, self.group.orders)),
        )

    def __pow__(self, k: int) -> "DirichletCharacter":
        return DirichletCharacter(
            self.group,
            tuple(e * k % o for e, o in zip(self.exponents, self.group.orders)),
        )

    def __str__(self):
        return f"chi_{self.modulus}{list(self.exponents)}"


def principal_character(N: int) -> DirichletCharacter:
    group = unit_group_structure(N)
    return DirichletCharacter(group, (0,) * len(group.factors))


def enumerate_characters(N: int) -> List[DirichletCharacter]:
    """Os phi(N) caracteres mod N; o primeiro é o principal."""
    group = unit_group_structure(N)
    return [
        DirichletCharacter(group, exponents)
        for exponents in product(*(range(o) for o in group.orders))
    ]


def evaluate(chi: DirichletCharacter, a: int) -> Optional[Fraction]:
    """
    Valor chi(a) como fração de volta q em [0, 1).

    Returns:
        None quando gcd(a, N) > 1 (o valor é zero); senão q com
        chi(a) = exp(2πi·q).
    """
    N = chi.modulus
    if gcd(a, N) != 1:
        return None
    logs = chi.group.dlog[a % N]
    return sum(
        (Fraction(e * x, o) for e, x, o in zip(chi.exponents, logs, chi.group.orders)),
        Fraction(0),
    ) % 1


def _local_conductor_exponent(block: LocalBlock, chi: DirichletCharacter) -> int:
    exps = [chi.exponents[i] for i in block.indices]
    if not any(exps):
        return 0
    p, k = block.prime, block.exponent
    if p != 2:
        # o núcleo da redução mod p^j é gerado por g^{(p-1)p^{j-1}}
        (e,) = exps
        j = 1
        while e % p ** (k - j):
            j += 1
        return j
    if k == 2:
        return 2
    # mod 2^k: núcleo mod 2^j (j >= 2) é gerado por 5^{2^{j-2}}
    e5 = exps[1]
    j = 2
    while e5 % 2 ** (k - j):
        j += 1
    return j


def conductor(chi: DirichletCharacter) -> int:
    """
    Menor N' | N tal que chi é trivial no núcleo de (Z/NZ)^× -> (Z/N'Z)^×.

    Calculado fator local a fator local; o caractere principal tem condutor 1.
    """
    result = 1
    for block in chi.group.blocks:
        result *= block.prime ** _local_conductor_exponent(block, chi)
    return result


def is_primitive(chi: DirichletCharacter) -> bool:
    return conductor(chi) == chi.modulus


def primitive_characters(N: int) -> List[DirichletCharacter]:
    """Caracteres mod N de condutor exatamente N."""
    return [chi for chi in enumerate_characters(N) if is_primitive(chi)]


def deflate(chi: DirichletCharacter) -> DirichletCharacter:
    """
    O caractere primitivo mod conductor(chi) que induz chi.

    Para cada gerador g do grupo mod f, escolhe-se um levantamento u ≡ g
    (mod f) coprimo com N e lê-se chi(u).
    """
    f = conductor(chi)
    N = chi.modulus
    target = unit_group_structure(f)
    exponents = []
    for g, order in target.factors:
        u = g % f if f > 1 else 1
        while gcd(u, N) != 1:
            u += f
        turn = evaluate(chi, u)
        exponents.append(int(turn * order))
    return DirichletCharacter(target, tuple(exponents))


def nth_roots(chi: DirichletCharacter, n: int) -> List[DirichletCharacter]:
    """
    Todos os mu mod N com mu^n = chi.

    Em cada fator cíclico de ordem o resolve-se n·x ≡ e (mod o): há solução
    sse g = gcd(n, o) divide e, e então exatamente g soluções. O total é 0 ou
    o produto dos gcd(n, o_i).
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError("o expoente n precisa ser >= 1", n)
    per_factor: List[List[int]] = []
    for e, o in zip(chi.exponents, chi.group.orders):
        g = gcd(n, o)
        if e % g:
            logger.debug("%s não tem raiz %d-ésima (fator de ordem %d)", chi, n, o)
            return []
        step = o // g
        base = 0 if step == 1 else (e // g) * pow(n // g, -1, step) % step
        per_factor.append([base + t * step for t in range(g)])
    return [DirichletCharacter(chi.group, exps) for exps in product(*per_factor)]


def character_to_json(chi: DirichletCharacter) -> Dict[str, Any]:
    return {
        "modulus": chi.modulus,
        "exponents": list(chi.exponents),
        "conductor": conductor(chi),
        "order": chi.order,
    }
