"""
Interface de linha de comando (CLI) do innercoh.

Comandos: table, classify, betti, intervals, residual, weight-check.
Códigos de saída: 0 sucesso, 2 entrada malformada, 3 pré-condição
matemática violada. Mensagens de erro vão só para o stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from .arith import format_rational
from .ctx import FORMATS, Context
from .degree_intervals import degree_profile, table_rows
from .dirichlet import enumerate_characters
from .errors import EXIT_OK, EXIT_SOFTWARE, InnerCohomologyError, InvalidInputError, error_handler
from .lie_cohomology import generator_degrees, poincare_polynomial, poincare_polynomial_with_circle
from .parser import Parser
from .render import (
    render_polynomial,
    render_profile,
    render_report,
    render_residual,
    render_table,
    render_weight_check,
)
from .spectral import classify, residual_spectrum
from .transformer import parse_weight
from .weight_lattice import (
    fundamental_view,
    integrality_diagnostics,
    is_constant_coefficient,
    is_dominant,
    is_integral,
    sheaf_is_nonzero,
    zero_weight,
)

logger = logging.getLogger(__name__)

DEFAULT_PRIMES = "2,3,5,7,11"


def _int_list(text: str) -> List[int]:
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise InvalidInputError("lista de inteiros malformada", text)
    if not values:
        raise InvalidInputError("a lista de primos está vazia", text)
    return values


@error_handler
def cmd_table(ctx: Context, primes: str) -> str:
    """Reproduz a tabela de graus de cohomologia interior para os primos dados."""
    return render_table(table_rows(_int_list(primes)), ctx.resolve_format())


@error_handler
def cmd_classify(ctx: Context, n: int, weight: str, level: int) -> str:
    """Relatório grau a grau de H^k_{!/cusp}."""
    w = parse_weight(weight, n, Parser())
    return render_report(classify(n, w, level), ctx.resolve_format())


@error_handler
def cmd_betti(ctx: Context, n: int, with_circle: bool = False) -> str:
    """Polinômio de Poincaré e números de Betti de H*(g, K_inf, C)."""
    poly = poincare_polynomial_with_circle(n) if with_circle else poincare_polynomial(n)
    return render_polynomial(generator_degrees(n), poly, ctx.resolve_format(), with_circle)


@error_handler
def cmd_intervals(ctx: Context, n: int) -> str:
    """Perfil de graus: I, I_!, I_cusp, I_irr e S0."""
    return render_profile(degree_profile(n), ctx.resolve_format())


@error_handler
def cmd_residual(ctx: Context, n: int, level: int, omega_index: Optional[int] = None,
                 weight: Optional[str] = None) -> str:
    """Espectro residual no nível N, inteiro ou só a fibra de um omega."""
    w = parse_weight(weight, n, Parser()) if weight is not None else zero_weight(n)
    omega = None
    if omega_index is not None:
        characters = enumerate_characters(level)
        if not 0 <= omega_index < len(characters):
            raise InvalidInputError(
                f"índice de omega fora de [0, {len(characters)})", omega_index
            )
        omega = characters[omega_index]
    descriptors = residual_spectrum(n, w, level, omega)
    return render_residual(n, level, descriptors, ctx.resolve_format())


@error_handler
def cmd_weight_check(ctx: Context, n: int, weight: str) -> str:
    """Predicados do reticulado de pesos para um peso."""
    w = parse_weight(weight, n, Parser())
    view = fundamental_view(w)
    integral = is_integral(w)
    if not integral:
        sheaf = "undefined (non-integral)"
    elif sheaf_is_nonzero(w):
        sheaf = "nonzero (nd even)"
    else:
        sheaf = "zero (nd odd)"
    record = {
        "n": w.n,
        "b": [format_rational(x) for x in w.b],
        "a": [format_rational(x) for x in view.a],
        "d": format_rational(view.d),
        "nd": format_rational(view.nd),
        "integral": integral,
        "dominant": is_dominant(w),
        "constant_coefficient": is_constant_coefficient(w),
        "sheaf": sheaf,
    }
    record.update(integrality_diagnostics(w))
    return render_weight_check(record, ctx.resolve_format())


def _bind_weight_values(argv: List[str]) -> List[str]:
    """
    Reescreve `--weight VALOR` como `--weight=VALOR`.

    Sem isso o argparse toma pesos como "-2,-2,-2" por uma opção.
    """
    bound = []
    tokens = iter(argv)
    for token in tokens:
        value = next(tokens, None) if token == "--weight" else None
        bound.append(token if value is None else f"{token}={value}")
    return bound


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="formato de saída (padrão: md no terminal, json redirecionado)")
    common.add_argument("--output", default=argparse.SUPPRESS,
                        help="grava a saída neste arquivo")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="logging detalhado no stderr")

    parser = argparse.ArgumentParser(
        prog="innercoh",
        description="Cohomologia interior de GL_n para n primo",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="tabela de graus por primo")
    p.add_argument("--primes", default=DEFAULT_PRIMES, help="lista de primos separados por vírgula")

    p = sub.add_parser("classify", parents=[common], help="classificação de H^k_{!/cusp}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True, help='"b_1,...,b_n" ou "a=a_1,...;d=d"')
    p.add_argument("--level", type=int, default=1)

    p = sub.add_parser("betti", parents=[common], help="polinômio de Poincaré")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--with-circle", action="store_true",
                   help="inclui o fator do círculo: H*(gl_n, O(n), C)")

    p = sub.add_parser("intervals", parents=[common], help="perfil de graus")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("residual", parents=[common], help="espectro residual")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--omega-index", type=int, default=None)
    p.add_argument("--weight", default=None)

    p = sub.add_parser("weight-check", parents=[common], help="predicados de um peso")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)

    return parser


def dispatch(ctx: Context, args: argparse.Namespace) -> str:
    if args.command == "table":
        return cmd_table(ctx, args.primes)
    if args.command == "classify":
        return cmd_classify(ctx, args.n, args.weight, args.level)
    if args.command == "betti":
        return cmd_betti(ctx, args.n, args.with_circle)
    if args.command == "intervals":
        return cmd_intervals(ctx, args.n)
    if args.command == "residual":
        return cmd_residual(ctx, args.n, args.level, args.omega_index, args.weight)
    return cmd_weight_check(ctx, args.n, args.weight)


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_bind_weight_values(argv))
    ctx = Context(
        output_format=getattr(args, "format", None),
        output=getattr(args, "output", None),
        verbose=getattr(args, "verbose", False),
    )
    ctx.configure_logging()
    try:
        ctx.emit(dispatch(ctx, args))
    except InnerCohomologyError as e:
        print(f"Erro: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.debug("falha inesperada", exc_info=True)
        print(f"Erro inesperado: {e}", file=sys.stderr)
        return EXIT_SOFTWARE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
