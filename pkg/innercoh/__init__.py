"""
innercoh - aritmética exata para a cohomologia interior de GL_n, n primo.

Este pacote implementa o reticulado de pesos, a cohomologia (g, K_inf) com
coeficientes constantes, os intervalos de graus, os caracteres de Dirichlet
do espectro residual e a classificação grau a grau de H^k_{!/cusp}.
"""

__version__ = "1.0.0"

from .degree_intervals import cusp_bounds, degree_profile, dim_symmetric_space, table_row
from .dirichlet import conductor, enumerate_characters, nth_roots, unit_group_structure
from .errors import InnerCohomologyError
from .lie_cohomology import betti, generator_degrees, poincare_polynomial
from .spectral import classify, residual_spectrum
from .weight_lattice import Weight, from_fundamental, from_standard, fundamental_view

__all__ = [
    "Weight",
    "from_standard",
    "from_fundamental",
    "fundamental_view",
    "generator_degrees",
    "poincare_polynomial",
    "betti",
    "dim_symmetric_space",
    "cusp_bounds",
    "degree_profile",
    "table_row",
    "unit_group_structure",
    "enumerate_characters",
    "conductor",
    "nth_roots",
    "classify",
    "residual_spectrum",
    "InnerCohomologyError",
]
