"""
Testes do espectro residual e da classificação grau a grau.
"""

import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from innercoh.arith import euler_phi, is_prime
from innercoh.degree_intervals import BOUNDARY, CUSP, degree_profile
from innercoh.dirichlet import enumerate_characters, principal_character
from innercoh.errors import (
    InvalidInputError,
    NonConstantCoefficientError,
    NonDominantWeightError,
    NonIntegralWeightError,
    NonPrimeRankError,
    ZeroSheafError,
)
from innercoh.lie_cohomology import betti, generator_degrees
from innercoh.node import NonconstantZero, ResidualKernel, SheafZero, Zero
from innercoh.spectral import (
    ParabolicShape,
    classify,
    duality_pairing_check,
    residual_spectrum,
    standard_parabolic_shapes,
    xi0_shapes,
)
from innercoh.weight_lattice import determinant_weight, from_standard, zero_weight

PRIMES = (2, 3, 5, 7, 11, 13)
LEVELS = (1, 4, 5, 7, 8, 9, 12)


def constant_weights(n):
    """Pesos constantes com nd par: 0 e 2·delta."""
    return [zero_weight(n), from_standard(n, [2] * n)]


class TestParabolicShapes(unittest.TestCase):
    """Testes para as formas de Levi dos parabólicos padrão."""

    def test_small_ranks(self):
        """Testa as composições para n = 2, 3."""
        self.assertEqual(standard_parabolic_shapes(2), [ParabolicShape((1, 1))])
        self.assertEqual(
            [s.parts for s in standard_parabolic_shapes(3)],
            [(1, 1, 1), (1, 2), (2, 1)],
        )
        self.assertEqual(str(ParabolicShape((1, 1))), "GL_1 × GL_1")

    def test_counts(self):
        """Testa 2^(n-1) - 1 formas próprias e 2^(n-1) com a forma trivial."""
        for n in range(2, 11):
            proper = standard_parabolic_shapes(n)
            self.assertEqual(len(proper), 2 ** (n - 1) - 1)
            self.assertTrue(all(s.is_proper and sum(s.parts) == n for s in proper))
            full = standard_parabolic_shapes(n, proper=False)
            self.assertEqual(len(full), 2 ** (n - 1))
            self.assertEqual(full[-1].parts, (n,))

    def test_rejects_small_rank(self):
        """Testa que n < 2 é rejeitado."""
        with self.assertRaises(InvalidInputError):
            standard_parabolic_shapes(1)

    def test_xi0_examples(self):
        """Testa as formas com blocos iguais."""
        self.assertEqual([s.parts for s in xi0_shapes(5)], [(1, 1, 1, 1, 1)])
        self.assertEqual([s.parts for s in xi0_shapes(4)], [(1, 1, 1, 1), (2, 2)])
        self.assertEqual(
            [s.parts for s in xi0_shapes(6)],
            [(1,) * 6, (2, 2, 2), (3, 3)],
        )

    def test_xi0_count_is_divisor_count(self):
        """Testa #formas = tau(n) - 1, igual a 1 sse n é primo, para n <= 30."""
        for n in range(2, 31):
            tau = sum(1 for m in range(1, n + 1) if n % m == 0)
            shapes = xi0_shapes(n)
            self.assertEqual(len(shapes), tau - 1)
            self.assertEqual(len(shapes) == 1, is_prime(n))
            self.assertEqual(shapes[0].parts, (1,) * n)

    def test_xi0_shapes_are_compositions(self):
        """Testa que as formas com blocos iguais estão entre as composições."""
        for n in range(2, 11):
            compositions = set(standard_parabolic_shapes(n))
            for shape in xi0_shapes(n):
                self.assertIn(shape, compositions)
                self.assertEqual(len(set(shape.parts)), 1)


class TestResidualSpectrum(unittest.TestCase):
    """Testes para o espectro residual."""

    def test_counts_are_phi(self):
        """Testa phi(N) descritores e a união das fibras igual ao grupo."""
        for n in (2, 3, 5, 7):
            for N in LEVELS:
                descriptors = residual_spectrum(n, zero_weight(n), N)
                self.assertEqual(len(descriptors), euler_phi(N))
                finite_parts = {d.finite_part.exponents for d in descriptors}
                self.assertEqual(finite_parts, {chi.exponents for chi in enumerate_characters(N)})
                for d in descriptors:
                    self.assertEqual(d.finite_part ** n, d.central_character)
                    self.assertEqual(d.multiplicity, 1)

    def test_level_one(self):
        """Testa o nível 1: um único descritor, o trivial."""
        (descriptor,) = residual_spectrum(5, zero_weight(5), 1)
        self.assertTrue(descriptor.finite_part.is_principal)
        self.assertEqual(descriptor.type_exponent, 0)

    def test_fixed_central_character(self):
        """Testa a fibra de um omega fixo."""
        fiber = residual_spectrum(3, zero_weight(3), 7, principal_character(7))
        self.assertEqual(len(fiber), 3)
        for n, N in ((5, 7), (7, 5)):
            for omega in enumerate_characters(N):
                self.assertEqual(len(residual_spectrum(n, zero_weight(n), N, omega)), 1)
        with self.assertRaises(InvalidInputError):
            residual_spectrum(3, zero_weight(3), 7, principal_character(8))

    def test_type_exponent(self):
        """Testa que o expoente de tipo é d."""
        descriptors = residual_spectrum(3, from_standard(3, [2, 2, 2]), 4)
        self.assertTrue(all(d.type_exponent == 2 for d in descriptors))

    def test_preconditions(self):
        """Testa as pré-condições do regime residual."""
        with self.assertRaises(NonPrimeRankError):
            residual_spectrum(4, zero_weight(4), 1)
        with self.assertRaises(NonConstantCoefficientError):
            residual_spectrum(5, from_standard(5, [1, 0, 0, 0, -1]), 1)
        with self.assertRaises(ZeroSheafError):
            residual_spectrum(5, determinant_weight(5), 1)
        with self.assertRaises(NonIntegralWeightError):
            residual_spectrum(2, from_standard(2, ["1/2", "1/2"]), 1)
        with self.assertRaises(InvalidInputError):
            residual_spectrum(3, zero_weight(3), 0)


class TestClassify(unittest.TestCase):
    """Testes para o classificador de H^k_{!/cusp}."""

    def test_rank_five_level_seven(self):
        """Testa n = 5, peso 0, N = 7: cota 6 em k = 5 e 9."""
        report = classify(5, zero_weight(5), 7)
        self.assertEqual(len(report.verdicts), 15)
        kernels = {v.k: v for v in report.verdicts if isinstance(v, ResidualKernel)}
        self.assertEqual(set(kernels), {5, 9})
        self.assertEqual(kernels[5].bound, 6)
        self.assertEqual(kernels[9].bound, 6)
        self.assertEqual(kernels[9].region, CUSP)
        self.assertFalse(kernels[9].cusp_vanishes)
        self.assertTrue(kernels[5].cusp_vanishes)

    def test_small_ranks_vanish(self):
        """Testa que n = 2, 3 dão Zero em todos os graus."""
        for n in (2, 3):
            for N in LEVELS:
                report = classify(n, zero_weight(n), N)
                self.assertTrue(all(isinstance(v, Zero) for v in report.verdicts))

    def test_odd_central_exponent(self):
        """Testa SheafZero quando nd é ímpar."""
        report = classify(2, from_standard(2, [1, 0]), 1)
        self.assertEqual(len(report.verdicts), 3)
        self.assertTrue(all(isinstance(v, SheafZero) for v in report.verdicts))
        self.assertTrue(all(v.kind == "SheafZero" for v in report.verdicts))

    def test_nonconstant_coefficients(self):
        """Testa NonconstantZero quando algum a_i é não nulo."""
        report = classify(5, from_standard(5, [1, 0, 0, 0, -1]), 7)
        self.assertTrue(all(isinstance(v, NonconstantZero) for v in report.verdicts))

    def test_conformance_table(self):
        """Testa todas as regras para n primo até 13 e vários níveis."""
        for n in PRIMES:
            s0 = set(generator_degrees(n).degrees)
            for N in LEVELS:
                for w in constant_weights(n):
                    report = classify(n, w, N)
                    self.assertEqual([v.k for v in report.verdicts],
                                     list(range(report.profile.dim_sym + 1)))
                    for v in report.verdicts:
                        if n >= 5 and v.k in s0:
                            self.assertIsInstance(v, ResidualKernel)
                            self.assertEqual(v.bound, betti(n, v.k) * euler_phi(N))
                        else:
                            self.assertIsInstance(v, Zero)
                            self.assertIsNone(v.bound)

    def test_conformance_table_vanishing_rules(self):
        """Testa NonconstantZero e SheafZero em toda a grade, e a ordem das regras."""
        for n in PRIMES:
            nonconstant_even = [
                from_standard(n, [2] + [0] * (n - 1)),
                from_standard(n, [3, 1] + [0] * (n - 2)),
            ]
            odd = [from_standard(n, [1] + [0] * (n - 1))]
            if n % 2:
                odd += [determinant_weight(n), from_standard(n, [3] * n)]
            for N in LEVELS:
                for w, expected in [(w, NonconstantZero) for w in nonconstant_even] + \
                                   [(w, SheafZero) for w in odd]:
                    report = classify(n, w, N)
                    self.assertEqual(len(report.verdicts), report.profile.dim_sym + 1)
                    for v in report.verdicts:
                        self.assertIsInstance(v, expected, (n, N, str(w), v.k))
                        self.assertIsNone(v.bound)

    def test_cusp_kernel_only_for_five_and_seven(self):
        """Testa ResidualKernel dentro de I_cusp só em k = 2n - 1 para n = 5, 7."""
        for n in PRIMES:
            report = classify(n, zero_weight(n), 1)
            in_window = [v.k for v in report.verdicts
                         if isinstance(v, ResidualKernel) and v.region == CUSP]
            self.assertEqual(in_window, [2 * n - 1] if n in (5, 7) else [])

    def test_boundary_degrees_agree(self):
        """Testa verdict(0) e verdict(dim) do mesmo tipo."""
        for n in PRIMES:
            for w in constant_weights(n) + [determinant_weight(n)]:
                report = classify(n, w, 5)
                first = report.verdict(0)
                last = report.verdict(report.profile.dim_sym)
                self.assertEqual(type(first), type(last))
                self.assertEqual(first.region, BOUNDARY)
                self.assertEqual(last.region, BOUNDARY)

    def test_duality_pairing_check(self):
        """Testa a verificação de dualidade nos extremos."""
        for n in PRIMES:
            self.assertTrue(duality_pairing_check(n))

    def test_cusp_vanishes_matches_window(self):
        """Testa cusp_vanishes = k fora de I_cusp."""
        for n in PRIMES:
            profile = degree_profile(n)
            for v in classify(n, zero_weight(n), 1).verdicts:
                self.assertEqual(v.cusp_vanishes, v.k not in profile.I_cusp)

    def test_per_degree(self):
        """Testa o acesso por grau."""
        report = classify(7, zero_weight(7), 1)
        self.assertIsInstance(report.per_degree[13], ResidualKernel)
        self.assertEqual(report.per_degree[13].bound, 1)

    def test_errors(self):
        """Testa as pré-condições do classificador."""
        with self.assertRaises(NonPrimeRankError):
            classify(4, zero_weight(4), 1)
        with self.assertRaises(NonPrimeRankError):
            classify(9, zero_weight(9), 1)
        with self.assertRaises(NonIntegralWeightError):
            classify(3, from_standard(3, ["1/2", 0, 0]), 1)
        with self.assertRaises(NonDominantWeightError):
            classify(3, from_standard(3, [0, 1, 0]), 1)
        with self.assertRaises(InvalidInputError):
            classify(3, zero_weight(5), 1)
        with self.assertRaises(InvalidInputError):
            classify(3, zero_weight(3), 0)


if __name__ == "__main__":
    unittest.main()
