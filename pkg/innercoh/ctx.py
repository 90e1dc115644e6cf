"""
Contexto de execução da CLI do innercoh.

Guarda a configuração de uma execução (formato de saída, destino,
verbosidade) e concentra a escrita da saída. Não há variáveis de ambiente
nem arquivos de configuração: tudo vem das flags da linha de comando.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, TextIO

from .errors import InvalidInputError

FORMATS = ("md", "json", "csv")


class Context:
    """
    Contexto global de uma execução da CLI.

    Attributes:
        output_format: "md", "json", "csv" ou None (decidido pelo destino)
        output: caminho do arquivo de saída ou None para stdout
        verbose: ativa logging em nível DEBUG no stderr
    """

    def __init__(
        self,
        output_format: Optional[str] = None,
        output: Optional[Path] = None,
        verbose: bool = False,
        stdout: Optional[TextIO] = None,
    ):
        if output_format is not None and output_format not in FORMATS:
            raise ValueError(f"formato desconhecido: {output_format}")
        self.output_format = output_format
        self.output = Path(output) if output is not None else None
        self.verbose = verbose
        self.stdout = stdout if stdout is not None else sys.stdout

    def resolve_format(self) -> str:
        """
        Formato efetivo: o pedido explicitamente ou, na falta dele, markdown
        para terminais e JSON quando a saída é redirecionada.
        """
        if self.output_format is not None:
            return self.output_format
        if self.output is None and self.stdout.isatty():
            return "md"
        return "json"

    def configure_logging(self) -> None:
        """Configura o logging no stderr; nada de log vai para o stdout."""
        logging.basicConfig(
            level=logging.DEBUG if self.verbose else logging.WARNING,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )

    def emit(self, text: str) -> None:
        """Escreve o texto renderizado no destino configurado."""
        if not text.endswith("\n"):
            text += "\n"
        if self.output is not None:
            try:
                self.output.write_text(text, encoding="utf-8")
            except OSError as e:
                raise InvalidInputError(f"não foi possível gravar a saída: {e.strerror}", str(self.output))
        else:
            self.stdout.write(text)
