"""
Espectro residual e classificação de H^k_{!/cusp} para GL_n com n primo.

O nível K_f é modelado por um único módulo N: as partes finitas residuais
disponíveis no nível N são os caracteres de Dirichlet mod N. Para n primo a
única forma parabólica com blocos iguais é a de Borel, e o espectro residual
de caractere central omega é gerado por mu ∘ det com mu^n = omega.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .arith import check_prime, check_rank, divisors, euler_phi
from .degree_intervals import DegreeProfile, degree_profile
from .dirichlet import DirichletCharacter, enumerate_characters, nth_roots
from .errors import (
    InvalidInputError,
    NonConstantCoefficientError,
    NonDominantWeightError,
    NonIntegralWeightError,
    ZeroSheafError,
)
from .lie_cohomology import betti
from .node import NonconstantZero, ResidualKernel, SheafZero, Verdict, Zero
from .weight_lattice import (
    Weight,
    fundamental_view,
    is_constant_coefficient,
    is_dominant,
    is_integral,
    sheaf_is_nonzero,
    zero_weight,
)

logger = logging.getLogger(__name__)

LEVEL_MODEL = (
    "nível modelado por um módulo N: as partes finitas residuais são os "
    "caracteres de Dirichlet mod N (primitivos de condutor dividindo N)"
)


def _check_level(N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise InvalidInputError("o nível N precisa ser um inteiro >= 1", N)


@dataclass(frozen=True)
class ParabolicShape:
    """Forma de Levi GL_{n_1} × ... × GL_{n_r} de um parabólico padrão."""

    parts: Tuple[int, ...]

    @property
    def is_proper(self) -> bool:
        return len(self.parts) > 1

    def __str__(self):
        return " × ".join(f"GL_{p}" for p in self.parts)


def standard_parabolic_shapes(n: int, proper: bool = True) -> List[ParabolicShape]:
    """
    Composições ordenadas de n, das com mais partes para as com menos.

    Com proper=True a forma de uma única parte (n) é omitida, restando
    2^(n-1) - 1 formas.
    """
    check_rank(n)
    shapes = []
    fewest_cuts = 1 if proper else 0
    for cuts in range(n - 1, fewest_cuts - 1, -1):
        for points in combinations(range(1, n), cuts):
            bounds = (0,) + points + (n,)
            shapes.append(ParabolicShape(tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))))
    return shapes


def xi0_shapes(n: int) -> List[ParabolicShape]:
    """Formas próprias com todas as partes iguais: uma por divisor m > 1 de n."""
    check_rank(n)
    return [
        ParabolicShape((n // m,) * m)
        for m in reversed(divisors(n))
        if m > 1
    ]


@dataclass(frozen=True)
class ResidualDescriptor:
    """Um constituinte mu ∘ det do espectro residual."""

    finite_part: DirichletCharacter
    central_character: DirichletCharacter
    type_exponent: Fraction
    multiplicity: int = 1


def _require_residual_regime(n: int, w: Weight) -> None:
    check_prime(n)
    if w.n != n:
        raise InvalidInputError(f"o peso tem posto {w.n}, esperado {n}", str(w))
    if not is_integral(w):
        raise NonIntegralWeightError(w)
    if not is_constant_coefficient(w):
        raise NonConstantCoefficientError(w)
    if not sheaf_is_nonzero(w):
        raise ZeroSheafError(w)


def residual_spectrum(
    n: int,
    w: Weight,
    N: int,
    omega: Optional[DirichletCharacter] = None,
) -> List[ResidualDescriptor]:
    """
    Enumera o espectro residual no nível N.

    Para cada caractere central omega mod N, a fibra nth_roots(omega, n)
    contribui seus membros; a união das fibras é o grupo de caracteres
    inteiro, logo há phi(N) descritores. Com `omega` fixo, só aquela fibra.
    """
    _require_residual_regime(n, w)
    _check_level(N)
    d = fundamental_view(w).d
    centrals = enumerate_characters(N) if omega is None else [omega]
    descriptors = []
    for central in centrals:
        if central.modulus != N:
            raise InvalidInputError(f"caractere central de módulo {central.modulus}, esperado {N}")
        for mu in nth_roots(central, n):
            descriptors.append(ResidualDescriptor(mu, central, d))
    logger.debug("espectro residual n=%d N=%d: %d descritores", n, N, len(descriptors))
    return descriptors


@dataclass(frozen=True)
class CohomologyReport:
    """Classificação de H^k_{!/cusp} grau a grau."""

    n: int
    weight: Weight
    level: int
    verdicts: Tuple[Verdict, ...]
    profile: DegreeProfile
    level_model: str = LEVEL_MODEL

    def verdict(self, k: int) -> Verdict:
        return self.verdicts[k]

    @property
    def per_degree(self) -> Dict[int, Verdict]:
        return {v.k: v for v in self.verdicts}


def classify(n: int, w: Weight, N: int) -> CohomologyReport:
    """
    Classifica H^k_{!/cusp} para k em [0, dim X_Sym].

    Ordem das regras: (i) nd ímpar -> SheafZero; (ii) algum a_i != 0 ->
    NonconstantZero; (iii) n em {2, 3} -> Zero; (iv) n >= 5 com
    coeficientes constantes -> ResidualKernel em S0, com cota
    betti(n, k)·phi(N), e Zero fora de S0.

    Raises:
        NonPrimeRankError: n composto
        NonIntegralWeightError, NonDominantWeightError: peso fora do domínio
    """
    check_prime(n)
    _check_level(N)
    if w.n != n:
        raise InvalidInputError(f"o peso tem posto {w.n}, esperado {n}", str(w))
    if not is_integral(w):
        raise NonIntegralWeightError(w)
    if not is_dominant(w):
        raise NonDominantWeightError(w)

    profile = degree_profile(n)
    finite_parts = euler_phi(N)

    def context(k):
        return dict(k=k, region=profile.region(k), cusp_vanishes=k not in profile.I_cusp)

    verdicts = []
    if not sheaf_is_nonzero(w):
        logger.debug("classify n=%d: nd ímpar", n)
        verdicts = [
            SheafZero(provenance="nd ímpar: omega(-I_n) = -1 e o feixe é nulo", **context(k))
            for k in profile.I
        ]
    elif not is_constant_coefficient(w):
        logger.debug("classify n=%d: coeficientes não constantes", n)
        verdicts = [
            NonconstantZero(
                provenance="lema de Wigner: caracteres infinitesimais distintos",
                **context(k),
            )
            for k in profile.I
        ]
    elif n in (2, 3):
        verdicts = [
            Zero(provenance="n = 2, 3: H_{!/cusp} se anula em todos os graus", **context(k))
            for k in profile.I
        ]
    else:
        for k in profile.I:
            if k in profile.s0:
                verdicts.append(ResidualKernel(
                    provenance="k em S0: núcleo da restrição na imagem residual",
                    dim_upper_bound=betti(n, k) * finite_parts,
                    **context(k),
                ))
            else:
                verdicts.append(Zero(
                    provenance="k fora de S0: H^k(g, K, C) = 0",
                    **context(k),
                ))
    return CohomologyReport(n=n, weight=w, level=N, verdicts=tuple(verdicts), profile=profile)


def duality_pairing_check(n: int) -> bool:
    """Os vereditos nos graus 0 e dim X_Sym coincidem para o feixe constante."""
    report = classify(n, zero_weight(n), 1)
    first, last = report.verdict(0), report.verdict(report.profile.dim_sym)
    return type(first) is type(last) and first.bound == last.bound
