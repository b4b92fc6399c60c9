"""
Analisador Léxico para literais de matriz
"""
import ply.lex as lex

from .tokens import BUILTINS, RESERVED, TOKENS


def column_of(data, lexpos):
    """Coluna (a partir de 1) de uma posição absoluta no texto"""
    start = data.rfind('\n', 0, lexpos) + 1
    return lexpos - start + 1


class MatrixLexer:
    """Analisador léxico da linguagem de literais de matriz"""

    def __init__(self):
        self.tokens = TOKENS
        self.reserved = RESERVED
        self.lexer = None
        self.errors = []
        self._data = ''

    def build(self, **kwargs):
        """Constrói o lexer"""
        self.lexer = lex.lex(module=self, **kwargs)
        return self.lexer

    t_LBRACKET = r'\['
    t_RBRACKET = r'\]'
    t_LPAREN = r'\('
    t_RPAREN = r'\)'
    t_COMMA = r','
    t_SEMI = r';'
    t_SLASH = r'/'
    t_MINUS = r'-'
    t_PLUS = r'\+'
    t_QUOTE = r"'"

    # Ignorar espaços e tabs
    t_ignore = ' \t\r'

    def t_COMMENT(self, t):
        r'\#.*'
        pass

    # Inteiros ficam int; decimais e notação científica viram float
    def t_NUMBER(self, t):
        r'(\d+\.\d*|\.\d+|\d+)([eE][-+]?\d+)?'
        text = t.value
        t.value = float(text) if any(c in text for c in '.eE') else int(text)
        return t

    def t_IDENT(self, t):
        r'[A-Za-z_][A-Za-z_0-9]*'
        t.type = self.reserved.get(t.value, 'IDENT')
        return t

    def t_newline(self, t):
        r'\n+'
        t.lexer.lineno += len(t.value)

    def t_error(self, t):
        """Tratamento de erros léxicos"""
        char = t.value[0]
        self.errors.append({
            'linha': t.lexer.lineno,
            'coluna': column_of(self._data, t.lexpos),
            'tipo': 'Erro Léxico',
            'token': 'ERROR',
            'valor': char,
            'mensagem': f"Caractere inválido '{char}'",
            'sugestao': "Use números, colchetes, ';' ou ',' entre elementos e os construtores "
                        + ', '.join(sorted(BUILTINS)),
        })
        t.lexer.skip(1)

    def input(self, data):
        self._data = data
        self.errors.clear()
        self.lexer.lineno = 1
        self.lexer.input(data)

    def tokenize(self, data):
        """Tokeniza o texto"""
        self.input(data)
        tokens = list(self.lexer)
        return tokens, self.errors
