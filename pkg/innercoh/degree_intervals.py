"""
Intervalos de graus para GL_n.

Calcula dim X_Sym, os extremos racionais a(n), b(n) da janela cuspidal e a
partição do intervalo inteiro I = [0, dim X_Sym] em
{0, dim} ⊔ I_! ⊔ I_cusp ⊔ I_irr. A pertinência usa comparação racional
exata: I_cusp é fechado nos extremos, I_! e I_irr são abertos.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from .arith import check_prime, check_rank, format_int_set, format_rational
from .errors import InvalidInputError
from .lie_cohomology import GeneratorDegrees, generator_degrees

BOUNDARY = "boundary"
INNER = "inner"
CUSP = "cusp"
IRRELEVANT = "irrelevant"


def dim_real_group(n: int) -> int:
    """dim GL_n(R) = n^2."""
    check_rank(n)
    return n * n


def dim_orthogonal_group(n: int) -> int:
    """dim O(n) = n(n-1)/2."""
    check_rank(n)
    return n * (n - 1) // 2


def dim_variant_symmetric_space(n: int) -> int:
    """dim GL_n(R)/O(n) = C(n+1, 2)."""
    return dim_real_group(n) - dim_orthogonal_group(n)


def dim_symmetric_space(n: int) -> int:
    """dim X_Sym = C(n+1, 2) - 1."""
    check_rank(n)
    return comb(n + 1, 2) - 1


def cusp_bounds(n: int) -> Tuple[Fraction, Fraction]:
    """
    Extremos da janela cuspidal.

    a = (C(n+1,2) - (n+1)/2) / 2,   b = (C(n+1,2) + (n+1)/2) / 2
    """
    check_rank(n)
    total = Fraction(comb(n + 1, 2))
    half_rank = Fraction(n + 1, 2)
    return (total - half_rank) / 2, (total + half_rank) / 2


@dataclass(frozen=True)
class DegreeProfile:
    """Os intervalos inteiros de graus e o conjunto S0 para um posto n."""

    n: int
    dim_sym: int
    a: Fraction
    b: Fraction
    I: Tuple[int, ...]
    I_inner: Tuple[int, ...]
    I_cusp: Tuple[int, ...]
    I_irr: Tuple[int, ...]
    s0: GeneratorDegrees

    def region(self, k: int) -> str:
        """Em qual parte da união disjunta o grau k está."""
        if k < 0 or k > self.dim_sym:
            raise InvalidInputError(f"o grau precisa estar em [0, {self.dim_sym}]", k)
        if k == 0 or k == self.dim_sym:
            return BOUNDARY
        if self.a <= k <= self.b:
            return CUSP
        if k < self.a:
            return INNER
        return IRRELEVANT


def degree_profile(n: int) -> DegreeProfile:
    """Monta a partição de I = [0, dim X_Sym] para o posto n."""
    dim = dim_symmetric_space(n)
    a, b = cusp_bounds(n)
    degrees = range(dim + 1)
    return DegreeProfile(
        n=n,
        dim_sym=dim,
        a=a,
        b=b,
        I=tuple(degrees),
        I_inner=tuple(k for k in degrees if 0 < k < a),
        I_cusp=tuple(k for k in degrees if a <= k <= b),
        I_irr=tuple(k for k in degrees if b < k < dim),
        s0=generator_degrees(n),
    )


def s0_cusp_overlap(n: int) -> Tuple[int, ...]:
    """S0 ∩ I_cusp; para n primo só é não vazio em n = 5, 7, onde vale {2n - 1}."""
    check_prime(n)
    profile = degree_profile(n)
    return tuple(k for k in profile.s0 if k in profile.I_cusp)


@dataclass(frozen=True)
class TableRow:
    """Uma linha da tabela de graus de cohomologia interior."""

    n: int
    dim_sym: int
    a: Fraction
    b: Fraction
    I_cusp: Tuple[int, ...]
    s0: Tuple[int, ...]

    @property
    def interval_label(self) -> str:
        """'[a,b]', acrescido do conjunto inteiro quando os extremos não são inteiros."""
        label = f"[{format_rational(self.a)},{format_rational(self.b)}]"
        if self.a.denominator != 1 or self.b.denominator != 1:
            label += " = " + format_int_set(self.I_cusp)
        return label

    @property
    def s0_label(self) -> str:
        return format_int_set(self.s0)


def table_row(n: int) -> TableRow:
    """Linha (n, dim X_Sym, I_cusp, S0) para n primo."""
    check_prime(n)
    profile = degree_profile(n)
    return TableRow(
        n=n,
        dim_sym=profile.dim_sym,
        a=profile.a,
        b=profile.b,
        I_cusp=profile.I_cusp,
        s0=profile.s0.degrees,
    )


def table_rows(primes) -> List[TableRow]:
    return [table_row(p) for p in primes]
