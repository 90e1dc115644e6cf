"""
Testes unitários do innercoh.

Cobrem o reticulado de pesos, a cohomologia (g, K_inf) e os intervalos de
graus. Os testes de caracteres de Dirichlet, espectro residual, parser e
CLI ficam em tests/.
"""

import random
import time
import unittest
from fractions import Fraction
from math import comb

import hypothesis.strategies as st
from hypothesis import given, settings

from .arith import check_prime, check_rank, is_prime
from .degree_intervals import (
    BOUNDARY,
    CUSP,
    INNER,
    IRRELEVANT,
    cusp_bounds,
    degree_profile,
    dim_symmetric_space,
    dim_variant_symmetric_space,
    s0_cusp_overlap,
    table_row,
)
from .errors import InvalidInputError, NonIntegralWeightError, NonPrimeRankError
from .lie_cohomology import (
    betti,
    generator_degrees,
    oracle_betti,
    poincare_polynomial,
    poincare_polynomial_with_circle,
)
from .weight_lattice import (
    central_exponent,
    determinant_weight,
    from_fundamental,
    from_standard,
    fundamental_view,
    integrality_diagnostics,
    is_constant_coefficient,
    is_dominant,
    is_integral,
    sheaf_is_nonzero,
    weight_from_json,
    weight_to_json,
    zero_weight,
)

RANKS = st.sampled_from([2, 3, 5, 7])


@st.composite
def rational_weights(draw, integral=False):
    n = draw(RANKS)
    if integral:
        entries = st.integers(min_value=-20, max_value=20).map(Fraction)
    else:
        entries = st.fractions(min_value=-20, max_value=20, max_denominator=12)
    return from_standard(n, draw(st.lists(entries, min_size=n, max_size=n)))


class TestWeightLattice(unittest.TestCase):
    """Testes para o reticulado de pesos."""

    def test_from_standard_zero_weight(self):
        """Testa a construção do peso nulo."""
        w = from_standard(3, [0, 0, 0])
        self.assertEqual(w, zero_weight(3))
        self.assertEqual(w.b, (0, 0, 0))

    def test_from_standard_echoes_input(self):
        """Testa que o construtor guarda b exatamente."""
        w = from_standard(2, [1, "1/2"])
        self.assertEqual(w.b, (Fraction(1), Fraction(1, 2)))

    def test_from_standard_rejects_bad_input(self):
        """Testa rejeição de n < 2 e de comprimento errado."""
        with self.assertRaises(InvalidInputError):
            from_standard(1, [0])
        with self.assertRaises(InvalidInputError):
            from_standard(3, [0, 0])
        with self.assertRaises(InvalidInputError):
            from_standard(2, [0.5, 0])

    def test_fundamental_view_examples(self):
        """Testa a visão fundamental nos exemplos conhecidos."""
        view = fundamental_view(from_standard(2, [1, 0]))
        self.assertEqual((view.a, view.d, view.nd), ((1,), Fraction(1, 2), 1))

        view = fundamental_view(determinant_weight(3))
        self.assertEqual((view.a, view.d, view.nd), ((0, 0), 1, 3))

        view = fundamental_view(from_standard(3, [2, 1, 0]))
        self.assertEqual((view.a, view.d, view.nd), ((1, 1), 1, 3))

    def test_round_trip_rank_five(self):
        """Testa a reconstrução de b a partir de (a, d)."""
        w = from_standard(5, [2, 2, 1, 0, 0])
        view = fundamental_view(w)
        self.assertEqual(from_fundamental(5, view.a, view.d), w)

    def test_from_fundamental_half_determinant(self):
        """Testa a=(1), d=1/2 em n=2, que é o peso (1, 0)."""
        w = from_fundamental(2, [1], "1/2")
        self.assertEqual(w.b, (1, 0))
        self.assertTrue(is_integral(w))

    def test_is_integral(self):
        """Testa integralidade em pesos inteiros e fracionários."""
        self.assertTrue(is_integral(from_standard(2, [1, 0])))
        self.assertFalse(is_integral(from_standard(3, ["1/3", "1/3", "1/3"])))
        self.assertFalse(is_integral(from_standard(2, ["1/2", "-1/2"])))

    def test_integrality_diagnostics_for_determinant(self):
        """Testa que só a congruência derivada aceita delta para n = 2."""
        diag = integrality_diagnostics(determinant_weight(2))
        self.assertTrue(diag["derived_congruence"])
        self.assertFalse(diag["printed_congruence"])
        diag = integrality_diagnostics(determinant_weight(3))
        self.assertTrue(diag["derived_congruence"])
        self.assertTrue(diag["printed_congruence"])

    def test_is_dominant(self):
        """Testa dominância."""
        self.assertTrue(is_dominant(from_standard(3, [2, 1, 0])))
        self.assertFalse(is_dominant(from_standard(2, [0, 1])))
        self.assertTrue(is_dominant(determinant_weight(5)))

    def test_central_exponent(self):
        """Testa nd = soma de b."""
        self.assertEqual(central_exponent(from_standard(2, [1, 0])), 1)
        self.assertEqual(central_exponent(zero_weight(3)), 0)
        self.assertEqual(central_exponent(determinant_weight(5)), 5)

    def test_sheaf_is_nonzero(self):
        """Testa a paridade de nd."""
        self.assertFalse(sheaf_is_nonzero(from_standard(2, [1, 0])))
        self.assertTrue(sheaf_is_nonzero(zero_weight(3)))
        self.assertTrue(sheaf_is_nonzero(from_standard(2, [1, 1])))
        with self.assertRaises(NonIntegralWeightError):
            sheaf_is_nonzero(from_standard(2, ["1/2", 0]))

    def test_is_constant_coefficient(self):
        """Testa coeficientes constantes (todos os a_i nulos)."""
        self.assertTrue(is_constant_coefficient(determinant_weight(5)))
        self.assertFalse(is_constant_coefficient(from_standard(2, [1, -1])))
        self.assertTrue(is_constant_coefficient(zero_weight(3)))

    def test_json(self):
        """Testa a serialização JSON com racionais em termos mínimos."""
        w = from_standard(2, ["2/4", -3])
        self.assertEqual(weight_to_json(w), {"n": 2, "b": ["1/2", "-3"]})
        self.assertEqual(weight_from_json({"n": 2, "b": ["1/2", "-3"]}), w)

    def test_integrality_oracle_random_weights(self):
        """Testa o critério de congruência contra o teste na base padrão."""
        rng = random.Random(20240601)
        for n in (2, 3, 5, 7):
            for _ in range(1000):
                b = []
                for _ in range(n):
                    denominator = 1 if rng.random() < 0.5 else rng.randint(1, 12)
                    b.append(Fraction(rng.randint(-24, 24), denominator))
                w = from_standard(n, b)
                self.assertEqual(is_integral(w), all(x.denominator == 1 for x in w.b))

    @settings(max_examples=200)
    @given(rational_weights())
    def test_round_trip_property(self, w):
        """Propriedade: (a, d) reconstrói b exatamente."""
        view = fundamental_view(w)
        self.assertEqual(from_fundamental(w.n, view.a, view.d), w)
        self.assertEqual(view.nd, view.d * w.n)

    @given(rational_weights())
    def test_dominance_is_weakly_decreasing(self, w):
        """Propriedade: dominante sse b é fracamente decrescente."""
        self.assertEqual(is_dominant(w), list(w.b) == sorted(w.b, reverse=True))

    @given(rational_weights(integral=True))
    def test_sheaf_verdict_invariant_under_even_shift(self, w):
        """Propriedade: somar 2·(1,...,1) preserva o veredito do feixe."""
        shifted = from_standard(w.n, [x + 2 for x in w.b])
        self.assertEqual(sheaf_is_nonzero(w), sheaf_is_nonzero(shifted))


class TestLieCohomology(unittest.TestCase):
    """Testes para a álgebra exterior H*(g, K_inf, C)."""

    def test_generator_degrees(self):
        """Testa S0 nas linhas da tabela."""
        self.assertEqual(generator_degrees(2).degrees, ())
        self.assertEqual(generator_degrees(3).degrees, (5,))
        self.assertEqual(generator_degrees(7).degrees, (5, 9, 13))
        self.assertEqual(generator_degrees(11).degrees, (5, 9, 13, 17, 21))
        with self.assertRaises(InvalidInputError):
            generator_degrees(1)

    def test_generator_degrees_invariants(self):
        """Testa que os graus são ímpares, distintos e >= 5."""
        for n in range(2, 40):
            degrees = generator_degrees(n).degrees
            self.assertEqual(len(degrees) == 0, n == 2)
            self.assertEqual(list(degrees), sorted(set(degrees)))
            self.assertTrue(all(k % 2 == 1 and k >= 5 for k in degrees))

    def test_poincare_polynomial_examples(self):
        """Testa os polinômios de Poincaré para n = 2, 5, 7."""
        self.assertEqual(poincare_polynomial(2).coeffs, (1,))
        self.assertEqual(str(poincare_polynomial(5)), "1 + t^5 + t^9 + t^14")
        self.assertEqual(
            str(poincare_polynomial(7)),
            "1 + t^5 + t^9 + t^13 + t^14 + t^18 + t^22 + t^27",
        )
        self.assertEqual(
            poincare_polynomial(5).as_dict(), {"0": 1, "5": 1, "9": 1, "14": 1}
        )

    def test_betti(self):
        """Testa extração de coeficientes."""
        self.assertEqual(betti(5, 0), 1)
        self.assertEqual(betti(5, 9), 1)
        self.assertEqual(betti(5, 7), 0)
        self.assertEqual(betti(5, 100), 0)
        with self.assertRaises(InvalidInputError):
            betti(5, -1)

    def test_oracle_betti(self):
        """Testa o oráculo de subconjuntos."""
        self.assertEqual(oracle_betti(2, 0), 1)
        self.assertEqual(oracle_betti(7, 27), 1)
        self.assertEqual(oracle_betti(11, 14), 1)

    def test_betti_matches_oracle(self):
        """Testa polinômio contra enumeração para n <= 23 e todos os graus."""
        for n in range(2, 24):
            poly = poincare_polynomial(n)
            for k in range(poly.top_degree + 2):
                self.assertEqual(betti(n, k), oracle_betti(n, k), (n, k))

    def test_duality_and_total_dimension(self):
        """Testa b_k = b_{D-k} e soma dos b_k = 2^|S0|."""
        for n in range(2, 24):
            poly = poincare_polynomial(n)
            top = sum(generator_degrees(n).degrees)
            self.assertEqual(poly.top_degree, top)
            self.assertEqual(poly.total_dimension(), 2 ** len(generator_degrees(n)))
            for k in range(top + 1):
                self.assertEqual(poly.coefficient(k), poly.coefficient(top - k))

    def test_top_degree_is_dim_symmetric_space(self):
        """Testa que o grau máximo é dim X_Sym para primos ímpares."""
        for n in range(3, 24):
            if is_prime(n):
                self.assertEqual(poincare_polynomial(n).top_degree, dim_symmetric_space(n))

    def test_circle_factor(self):
        """Testa o fator (1 + t) de H*(gl_n, O(n), C)."""
        poly = poincare_polynomial_with_circle(5)
        self.assertEqual(str(poly), "1 + t + t^5 + t^6 + t^9 + t^10 + t^14 + t^15")
        for n in range(2, 16):
            self.assertEqual(
                poincare_polynomial_with_circle(n).total_dimension(),
                2 * poincare_polynomial(n).total_dimension(),
            )

    def test_betti_sweep_reuses_polynomial(self):
        """Testa que o polinômio é montado uma vez por posto e a varredura cabe em 1 s."""
        self.assertIs(poincare_polynomial(11), poincare_polynomial(11))
        with self.assertRaises(InvalidInputError):
            poincare_polynomial(11.0)
        start = time.perf_counter()
        for n in range(2, 24):
            for k in range(dim_symmetric_space(n) + 2):
                betti(n, k)
        self.assertLess(time.perf_counter() - start, 1.0)


class TestRankChecks(unittest.TestCase):
    """Testes para a validação de posto compartilhada pelos módulos."""

    def test_check_rank(self):
        """Testa a rejeição de postos inválidos."""
        check_rank(2)
        for bad in (1, 0, -3, True, "5"):
            with self.assertRaises(InvalidInputError):
                check_rank(bad)

    def test_check_prime(self):
        """Testa a rejeição de postos compostos."""
        check_prime(7)
        with self.assertRaises(NonPrimeRankError):
            check_prime(9)
        with self.assertRaises(InvalidInputError):
            check_prime(1)

    def test_modules_share_the_same_rules(self):
        """Testa que Betti, intervalos e pesos rejeitam o mesmo posto."""
        for call in (
            lambda: generator_degrees(1),
            lambda: dim_symmetric_space(1),
            lambda: cusp_bounds(0),
            lambda: from_fundamental(1, [], 0),
            lambda: zero_weight(1),
        ):
            with self.assertRaises(InvalidInputError):
                call()
        with self.assertRaises(NonPrimeRankError):
            s0_cusp_overlap(15)


class TestDegreeIntervals(unittest.TestCase):
    """Testes para os intervalos de graus."""

    def test_dim_symmetric_space(self):
        """Testa a coluna de dimensões da tabela."""
        self.assertEqual(
            [dim_symmetric_space(n) for n in (2, 3, 5, 7, 11)], [2, 5, 14, 27, 65]
        )
        with self.assertRaises(InvalidInputError):
            dim_symmetric_space(1)

    def test_dim_variant_symmetric_space(self):
        """Testa dim GL_n(R)/O(n) = C(n+1, 2)."""
        for n in range(2, 20):
            self.assertEqual(dim_variant_symmetric_space(n), comb(n + 1, 2))

    def test_cusp_bounds(self):
        """Testa os extremos a(n), b(n)."""
        self.assertEqual(cusp_bounds(2), (Fraction(3, 4), Fraction(9, 4)))
        self.assertEqual(cusp_bounds(5), (6, 9))
        self.assertEqual(cusp_bounds(7), (12, 16))
        self.assertEqual(cusp_bounds(11), (30, 36))
        self.assertEqual(cusp_bounds(13), (42, 49))

    def test_endpoint_identities(self):
        """Testa a + b = C(n+1, 2) e b - a = (n+1)/2 para n em [2, 50]."""
        for n in range(2, 51):
            a, b = cusp_bounds(n)
            self.assertEqual(a + b, comb(n + 1, 2))
            self.assertEqual(b - a, Fraction(n + 1, 2))

    def test_odd_rank_endpoint_integrality(self):
        """Testa: a, b inteiros sse (n+1)/2 e C(n+1, 2) têm a mesma paridade."""
        for n in range(3, 51, 2):
            a, b = cusp_bounds(n)
            same_parity = ((n + 1) // 2) % 2 == comb(n + 1, 2) % 2
            self.assertEqual(a.denominator == 1 and b.denominator == 1, same_parity)

    def test_degree_profile_examples(self):
        """Testa os perfis para n = 2, 3, 7."""
        p = degree_profile(2)
        self.assertEqual((p.I_cusp, p.I_inner, p.I_irr), ((1, 2), (), ()))
        p = degree_profile(3)
        self.assertEqual((p.I_cusp, p.I_inner, p.I_irr), ((2, 3, 4), (1,), ()))
        p = degree_profile(7)
        self.assertEqual(p.I_cusp, tuple(range(12, 17)))
        self.assertEqual(p.I_inner, tuple(range(1, 12)))
        self.assertEqual(p.I_irr, tuple(range(17, 27)))

    def test_partition_of_degree_range(self):
        """Testa que as peças cobrem I e são disjuntas (n >= 3)."""
        for n in range(2, 51):
            p = degree_profile(n)
            pieces = [{0, p.dim_sym}, set(p.I_inner), set(p.I_cusp), set(p.I_irr)]
            self.assertEqual(set().union(*pieces), set(p.I))
            if n >= 3:
                self.assertEqual(sum(len(piece) for piece in pieces), len(p.I))

    def test_rank_two_top_degree_overlap(self):
        """Testa que para n = 2 o grau do topo também está em I_cusp."""
        p = degree_profile(2)
        self.assertEqual({0, p.dim_sym} & set(p.I_cusp), {2})
        self.assertEqual(p.region(2), BOUNDARY)

    def test_region(self):
        """Testa a região de cada grau para n = 5."""
        p = degree_profile(5)
        self.assertEqual(p.region(0), BOUNDARY)
        self.assertEqual(p.region(14), BOUNDARY)
        self.assertEqual(p.region(3), INNER)
        self.assertEqual(p.region(6), CUSP)
        self.assertEqual(p.region(9), CUSP)
        self.assertEqual(p.region(10), IRRELEVANT)
        with self.assertRaises(InvalidInputError):
            p.region(15)

    def test_s0_cusp_overlap(self):
        """Testa S0 ∩ I_cusp."""
        self.assertEqual(s0_cusp_overlap(5), (9,))
        self.assertEqual(s0_cusp_overlap(7), (13,))
        self.assertEqual(s0_cusp_overlap(2), ())
        self.assertEqual(s0_cusp_overlap(3), ())
        for n in range(11, 98):
            if is_prime(n):
                self.assertEqual(s0_cusp_overlap(n), (), n)
        with self.assertRaises(NonPrimeRankError):
            s0_cusp_overlap(4)

    def test_top_generator_is_below_window_from_eleven(self):
        """Testa 2n - 1 < a(n) para primos n >= 11 e 2n - 1 em I_cusp para 5, 7."""
        for n in (5, 7):
            self.assertIn(2 * n - 1, degree_profile(n).I_cusp)
        for n in range(11, 98):
            if is_prime(n):
                self.assertLess(2 * n - 1, cusp_bounds(n)[0])

    def test_table_row(self):
        """Testa as linhas da tabela."""
        row = table_row(2)
        self.assertEqual(row.interval_label, "[3/4,9/4] = {1,2}")
        self.assertEqual(row.s0_label, "∅")
        row = table_row(3)
        self.assertEqual((row.n, row.dim_sym, row.interval_label, row.s0_label),
                         (3, 5, "[2,4]", "{5}"))
        row = table_row(5)
        self.assertEqual((row.dim_sym, row.interval_label, row.s0_label), (14, "[6,9]", "{5,9}"))
        row = table_row(11)
        self.assertEqual((row.dim_sym, row.interval_label, row.s0_label),
                         (65, "[30,36]", "{5,9,13,17,21}"))
        with self.assertRaises(NonPrimeRankError):
            table_row(9)


def run_tests():
    """Executa todos os testes."""
    unittest.main(module=__name__, verbosity=2)


if __name__ == "__main__":
    run_tests()
