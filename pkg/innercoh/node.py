"""
Nós de veredito do relatório de cohomologia.

Cada grau k do relatório recebe um veredito; cada classe representa um tipo
de veredito e aceita um Visitor, que os renderizadores usam para produzir
markdown, JSON e CSV.
"""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Verdict:
    """Classe base para todos os vereditos.

    Attributes:
        k: grau
        region: parte da partição de I que contém k
        cusp_vanishes: k fora de I_cusp, onde H^k_cusp = 0 e H^k_! = H^k_{!/cusp}
        provenance: a regra que produziu o veredito
    """

    k: int
    region: str
    cusp_vanishes: bool
    provenance: str

    kind = "Verdict"

    def accept(self, visitor):
        """Método para o padrão Visitor, a ser implementado por subclasses."""
        raise NotImplementedError

    @property
    def bound(self) -> Optional[int]:
        return None


@dataclass(frozen=True)
class SheafZero(Verdict):
    """nd ímpar: omega(-I_n) = -1 anula o feixe de coeficientes."""

    kind = "SheafZero"

    def accept(self, visitor):
        return visitor.visit_sheaf_zero(self)


@dataclass(frozen=True)
class NonconstantZero(Verdict):
    """Algum a_i != 0: coeficientes não constantes, tudo se anula."""

    kind = "NonconstantZero"

    def accept(self, visitor):
        return visitor.visit_nonconstant_zero(self)


@dataclass(frozen=True)
class Zero(Verdict):
    """Anulamento forçado pela classificação para coeficientes constantes."""

    kind = "Zero"

    def accept(self, visitor):
        return visitor.visit_zero(self)


@dataclass(frozen=True)
class ResidualKernel(Verdict):
    """Grau em S0: H^k_{!/cusp} é o núcleo da restrição na imagem residual."""

    dim_upper_bound: int = 0
    symbolic: str = "ker(r^k | Φ_BG(Res_f(λ)))"

    kind = "ResidualKernel"

    def accept(self, visitor):
        return visitor.visit_residual_kernel(self)

    @property
    def bound(self) -> Optional[int]:
        return self.dim_upper_bound


# --- Visitor Pattern ---

class Visitor:
    """Classe base para o padrão Visitor sobre vereditos."""

    def visit_sheaf_zero(self, verdict):
        raise NotImplementedError

    def visit_nonconstant_zero(self, verdict):
        raise NotImplementedError

    def visit_zero(self, verdict):
        raise NotImplementedError

    def visit_residual_kernel(self, verdict):
        raise NotImplementedError
