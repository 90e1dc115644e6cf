"""
Testes do parser e do transformer de especificações de peso.
"""

import sys
import unittest
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from innercoh.errors import InvalidInputError, WeightSpecSyntaxError
from innercoh.parser import Parser
from innercoh.transformer import WeightSpec, parse_weight, transform_to_spec


class TestWeightSpecParser(unittest.TestCase):
    """Testes para a mini-linguagem de pesos."""

    def setUp(self):
        self.parser = Parser()

    def test_standard_basis(self):
        """Testa pesos na base padrão."""
        spec = transform_to_spec(self.parser.parse("0, 0, 0"))
        self.assertEqual(spec, WeightSpec("standard", (0, 0, 0)))
        w = parse_weight("1/2,-1/2", 2, self.parser)
        self.assertEqual(w.b, (Fraction(1, 2), Fraction(-1, 2)))

    def test_fundamental_basis(self):
        """Testa pesos na base fundamental."""
        spec = transform_to_spec(self.parser.parse("a=1,1;d=1"))
        self.assertEqual(spec, WeightSpec("fundamental", (1, 1), Fraction(1)))
        self.assertEqual(parse_weight("a=1,1;d=1", 3, self.parser).b, (2, 1, 0))
        self.assertEqual(parse_weight("a = 1; d = 1/2;", 2, self.parser).b, (1, 0))

    def test_fundamental_and_standard_agree(self):
        """Testa que as duas bases descrevem o mesmo peso."""
        self.assertEqual(
            parse_weight("2,2,1,0,0", 5, self.parser),
            parse_weight("a=0,1,1,0;d=1", 5, self.parser),
        )

    def test_syntax_errors(self):
        """Testa entradas malformadas."""
        for source in ("", "1,,2", "a=1;", "x", "1.5,0", "a=1;d=1/2;d=3"):
            with self.subTest(source=source):
                with self.assertRaises(WeightSpecSyntaxError):
                    parse_weight(source, 2, self.parser)

    def test_zero_denominator(self):
        """Testa denominador zero."""
        with self.assertRaises(WeightSpecSyntaxError):
            parse_weight("1/0,0", 2, self.parser)

    def test_length_mismatch(self):
        """Testa quantidade de coeficientes diferente de n."""
        with self.assertRaises(WeightSpecSyntaxError) as ctx:
            parse_weight("1,0", 3, self.parser)
        self.assertIsInstance(ctx.exception, InvalidInputError)
        with self.assertRaises(WeightSpecSyntaxError):
            parse_weight("a=1,1;d=0", 2, self.parser)


if __name__ == "__main__":
    unittest.main()
