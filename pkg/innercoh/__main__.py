"""
Ponto de entrada principal para o módulo innercoh.

Permite executar a CLI usando `python -m innercoh`.
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
