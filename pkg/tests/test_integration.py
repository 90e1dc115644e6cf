"""
Testes de integração para a CLI do innercoh.

Estes testes executam os subcomandos de ponta a ponta através de main(),
capturando stdout e stderr, e comparam a saída com valores esperados.
"""

import json
import sys
import tempfile
import unittest
from io import StringIO
from pathlib import Path

# Adiciona o diretório pai ao path para importar o pacote innercoh
sys.path.insert(0, str(Path(__file__).parent.parent))

from innercoh.cli import main
from innercoh.errors import EXIT_BAD_INPUT, EXIT_DOMAIN, EXIT_OK

GOLDEN_TABLE = """\
| n | dim X_Sym | I_cusp = [a(n),b(n)] | S⁰ |
|---|---|---|---|
| 2 | 2 | [3/4,9/4] = {1,2} | ∅ |
| 3 | 5 | [2,4] | {5} |
| 5 | 14 | [6,9] | {5,9} |
| 7 | 27 | [12,16] | {5,9,13} |
| 11 | 65 | [30,36] | {5,9,13,17,21} |
"""


class TestCommandLine(unittest.TestCase):
    """Testes de integração para os subcomandos da CLI."""

    def _run_cli(self, *argv):
        """Executa a CLI e retorna (código de saída, stdout, stderr)."""
        old_stdout, old_stderr = sys.stdout, sys.stderr
        sys.stdout = captured_output = StringIO()
        sys.stderr = captured_errors = StringIO()
        try:
            code = main(list(argv))
            return code, captured_output.getvalue(), captured_errors.getvalue()
        finally:
            sys.stdout, sys.stderr = old_stdout, old_stderr

    def _run_json(self, *argv):
        code, out, err = self._run_cli(*argv, "--format", "json")
        self.assertEqual(code, EXIT_OK, err)
        return json.loads(out)

    def test_table_golden(self):
        """Testa a tabela padrão contra o arquivo esperado."""
        code, out, err = self._run_cli("table", "--format", "md")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, GOLDEN_TABLE)
        self.assertEqual(err, "")

    def test_table_extra_prime(self):
        """Testa a linha de n = 13."""
        (row,) = self._run_json("table", "--primes", "13")
        self.assertEqual(row["n"], 13)
        self.assertEqual(row["dim_sym"], 90)
        self.assertEqual((row["a"], row["b"]), ("42", "49"))
        self.assertEqual(row["s0"], [5, 9, 13, 17, 21, 25])

    def test_table_rejects_composite(self):
        """Testa que um posto composto sai com código 2 e nada no stdout."""
        code, out, err = self._run_cli("table", "--primes", "4", "--format", "md")
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertEqual(out, "")
        self.assertIn("4", err)

    def test_default_format_is_json_when_redirected(self):
        """Testa JSON como padrão quando o stdout não é um terminal."""
        code, out, _ = self._run_cli("table", "--primes", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)[0]["I_cusp"], [2, 3, 4])

    def test_table_csv(self):
        """Testa a saída CSV da tabela."""
        code, out, _ = self._run_cli("table", "--primes", "2,5", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            out.splitlines(),
            ["n,dim_sym,a,b,I_cusp,s0", "2,2,3/4,9/4,\"{1,2}\",∅", "5,14,6,9,\"{6,7,8,9}\",\"{5,9}\""],
        )

    def test_classify_rank_five(self):
        """Testa n = 5, peso 0, N = 7."""
        report = self._run_json("classify", "--n", "5", "--weight", "0,0,0,0,0", "--level", "7")
        self.assertEqual(report["level"], 7)
        kernels = {v["k"]: v for v in report["verdicts"] if v["verdict"] == "ResidualKernel"}
        self.assertEqual(sorted(kernels), [5, 9])
        self.assertEqual(kernels[5]["bound"], 6)
        self.assertEqual(kernels[9]["bound"], 6)
        self.assertEqual(kernels[9]["region"], "cusp")
        self.assertEqual(list(kernels[9]), [
            "k", "region", "verdict", "bound", "symbolic", "cusp_vanishes", "provenance",
        ])

    def test_classify_rank_three(self):
        """Testa que n = 3 dá Zero em todos os graus."""
        report = self._run_json("classify", "--n", "3", "--weight", "0,0,0")
        self.assertEqual([v["verdict"] for v in report["verdicts"]], ["Zero"] * 6)

    def test_classify_odd_central_exponent(self):
        """Testa SheafZero para o peso (1, 0) de GL_2."""
        report = self._run_json("classify", "--n", "2", "--weight", "1,0")
        self.assertEqual([v["verdict"] for v in report["verdicts"]], ["SheafZero"] * 3)

    def test_classify_fundamental_basis(self):
        """Testa o peso na base fundamental."""
        report = self._run_json("classify", "--n", "3", "--weight", "a=1,1;d=1")
        self.assertEqual(report["weight"], {"n": 3, "b": ["2", "1", "0"]})
        self.assertEqual(report["verdicts"][0]["verdict"], "SheafZero")

    def test_classify_markdown(self):
        """Testa o relatório em markdown."""
        code, out, _ = self._run_cli(
            "classify", "--n", "5", "--weight", "0,0,0,0,0", "--level", "7", "--format", "md"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("| k | region | verdict | bound | symbolic |", out)
        self.assertIn("| 9 | cusp | ResidualKernel | 6 |", out)

    def test_classify_domain_errors(self):
        """Testa códigos de saída de pré-condições violadas."""
        code, out, err = self._run_cli("classify", "--n", "3", "--weight", "0,1,0")
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertEqual(out, "")
        self.assertIn("dominant", err)

        code, _, err = self._run_cli("classify", "--n", "3", "--weight", "1/2,0,0")
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertIn("integral", err)

    def test_classify_input_errors(self):
        """Testa entradas malformadas."""
        for argv in (
            ("classify", "--n", "3", "--weight", "x"),
            ("classify", "--n", "3", "--weight", "0,0"),
            ("classify", "--n", "4", "--weight", "0,0,0,0"),
            ("classify", "--n", "3", "--weight", "0,0,0", "--level", "0"),
        ):
            with self.subTest(argv=argv):
                code, out, err = self._run_cli(*argv)
                self.assertEqual(code, EXIT_BAD_INPUT)
                self.assertEqual(out, "")
                self.assertTrue(err.startswith("Erro:"))

    def test_betti(self):
        """Testa o polinômio de Poincaré para n = 7."""
        result = self._run_json("betti", "--n", "7")
        self.assertEqual(result["s0"], [5, 9, 13])
        self.assertEqual(result["polynomial"], "1 + t^5 + t^9 + t^13 + t^14 + t^18 + t^22 + t^27")
        self.assertEqual(result["betti"]["27"], 1)
        self.assertNotIn("1", result["betti"])

    def test_betti_with_circle(self):
        """Testa o fator do círculo."""
        result = self._run_json("betti", "--n", "3", "--with-circle")
        self.assertTrue(result["with_circle"])
        self.assertEqual(result["polynomial"], "1 + t + t^5 + t^6")

    def test_intervals(self):
        """Testa o perfil de graus para n = 11."""
        profile = self._run_json("intervals", "--n", "11")
        self.assertEqual(profile["dim_sym"], 65)
        self.assertEqual(profile["I_cusp"], list(range(30, 37)))
        self.assertEqual(profile["I_inner"], list(range(1, 30)))
        self.assertEqual(profile["I_irr"], list(range(37, 65)))
        self.assertEqual(profile["s0"], [5, 9, 13, 17, 21])

    def test_residual(self):
        """Testa o espectro residual e a fibra de um omega fixo."""
        result = self._run_json("residual", "--n", "3", "--level", "7")
        self.assertEqual(result["count"], 6)
        result = self._run_json("residual", "--n", "3", "--level", "7", "--omega-index", "0")
        self.assertEqual(result["count"], 3)
        for descriptor in result["descriptors"]:
            self.assertEqual(descriptor["central_character"]["exponents"], [0])
            self.assertEqual(descriptor["type_exponent"], "0")

    def test_residual_errors(self):
        """Testa omega fora do intervalo e peso com nd ímpar."""
        code, _, _ = self._run_cli("residual", "--n", "3", "--level", "7", "--omega-index", "6")
        self.assertEqual(code, EXIT_BAD_INPUT)
        code, _, err = self._run_cli("residual", "--n", "3", "--weight", "1,1,1")
        self.assertEqual(code, EXIT_DOMAIN)
        self.assertIn("sheaf_nonzero", err)

    def test_weight_check(self):
        """Testa os predicados do peso (2, 1, 0)."""
        record = self._run_json("weight-check", "--n", "3", "--weight", "2,1,0")
        self.assertEqual(record["a"], ["1", "1"])
        self.assertEqual(record["d"], "1")
        self.assertEqual(record["nd"], "3")
        self.assertTrue(record["integral"])
        self.assertTrue(record["dominant"])
        self.assertFalse(record["constant_coefficient"])
        self.assertEqual(record["sheaf"], "zero (nd odd)")
        self.assertTrue(record["derived_congruence"])

    def test_weight_check_non_integral(self):
        """Testa um peso fracionário."""
        record = self._run_json("weight-check", "--n", "2", "--weight", "1/2,0")
        self.assertFalse(record["integral"])
        self.assertEqual(record["sheaf"], "undefined (non-integral)")

    def test_negative_leading_weight(self):
        """Testa pesos que começam com '-' passados como argumento separado."""
        report = self._run_json(
            "classify", "--n", "5", "--weight", "-2,-2,-2,-2,-2", "--level", "7"
        )
        self.assertEqual(report["weight"], {"n": 5, "b": ["-2"] * 5})
        kernels = {v["k"]: v["bound"] for v in report["verdicts"] if v["verdict"] == "ResidualKernel"}
        self.assertEqual(kernels, {5: 6, 9: 6})

        record = self._run_json("weight-check", "--n", "2", "--weight", "-1,-3")
        self.assertEqual(record["nd"], "-4")
        result = self._run_json("residual", "--n", "3", "--level", "4", "--weight", "-2,-2,-2")
        self.assertEqual(result["count"], 2)
        self.assertEqual(result["descriptors"][0]["type_exponent"], "-2")

    def test_table_rejects_empty_prime_list(self):
        """Testa que uma lista de primos vazia é entrada malformada."""
        code, out, err = self._run_cli("table", "--primes", "", "--format", "md")
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("Erro:"))

    def test_unwritable_output(self):
        """Testa que um destino inválido para --output sai com código 2."""
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "inexistente" / "table.md"
            code, out, err = self._run_cli("table", "--format", "md", "--output", str(target))
        self.assertEqual(code, EXIT_BAD_INPUT)
        self.assertEqual(out, "")
        self.assertIn("table.md", err)
        self.assertNotIn("inesperado", err)

    def test_output_file(self):
        """Testa a escrita em arquivo com --output."""
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "table.md"
            code, out, _ = self._run_cli("table", "--format", "md", "--output", str(target))
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(out, "")
            self.assertEqual(target.read_text(encoding="utf-8"), GOLDEN_TABLE)

    def test_output_is_deterministic(self):
        """Testa que invocações idênticas produzem bytes idênticos."""
        argv = ("classify", "--n", "7", "--weight", "0,0,0,0,0,0,0", "--level", "12", "--format", "json")
        first = self._run_cli(*argv)
        second = self._run_cli(*argv)
        self.assertEqual(first, second)


if __name__ == "__main__":
    unittest.main()
