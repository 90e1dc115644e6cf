"""
Parser de especificações de peso usando Lark.

Este módulo implementa o analisador léxico e sintático da mini-linguagem de
pesos aceita pela CLI ("0,0,0" na base padrão ou "a=1,1;d=1" na base
fundamental). A gramática fica em grammar.lark.
"""

from pathlib import Path

from lark import Lark, LarkError

from .errors import WeightSpecSyntaxError


class Parser:
    """
    Parser principal para especificações de peso.

    Carrega a gramática do arquivo grammar.lark e fornece métodos
    para fazer parsing de uma especificação.
    """

    def __init__(self):
        """Inicializa o parser carregando a gramática."""
        self._load_grammar()
        self.parser = Lark(
            self.grammar,
            start='start',
            parser='lalr',
            maybe_placeholders=False,
        )

    def _load_grammar(self):
        """Carrega a gramática do arquivo grammar.lark."""
        grammar_path = Path(__file__).parent / 'grammar.lark'
        try:
            self.grammar = grammar_path.read_text(encoding='utf-8')
        except OSError as e:
            raise WeightSpecSyntaxError(f"Erro ao carregar gramática {grammar_path}: {e}")

    def parse(self, source):
        """
        Faz o parsing de uma especificação de peso.

        Args:
            source (str): texto da especificação

        Returns:
            Tree: Árvore sintática gerada pelo Lark

        Raises:
            WeightSpecSyntaxError: Em caso de erro de sintaxe
        """
        try:
            return self.parser.parse(source)
        except LarkError as e:
            raise WeightSpecSyntaxError(f"Erro de sintaxe no peso: {e}", source)
