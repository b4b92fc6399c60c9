"""
Analisador Sintático para literais de matriz
Implementado com PLY (Python Lex-Yacc)

Formas aceitas:
    [1 0; 0 1]          linhas separadas por ';', elementos por espaço ou ','
    [[1, 0], [0, 1]]    lista de linhas (como em JSON)
    2/3, -1.5e-2        frações e notação científica
    I(n) J(k) ones(m,n) zeros(m,n) kron(M, N)
    M'                  transposição
    -M                  negação
"""
import threading

import numpy as np
import ply.yacc as yacc

from ..erros import LiteralError
from ..lexico.lexico import MatrixLexer, column_of
from ..lexico.tokens import BUILTIN_SIGNATURES, BUILTINS, TOKENS
from ..nucleo.stp import check_size, j_mat


class MatrixParser:
    """Analisador sintático de literais de matriz"""

    precedence = (
        ('right', 'UMINUS'),
    )

    def __init__(self, lexer):
        self.lexer = lexer
        self.tokens = TOKENS
        self.parser = None
        self.errors = []

    def build(self, **kwargs):
        """Constrói o parser"""
        kwargs.setdefault('debug', False)
        kwargs.setdefault('write_tables', False)
        # IDENT existe só para gerar erros com sugestão
        kwargs.setdefault('errorlog', yacc.NullLogger())
        self.parser = yacc.yacc(module=self, **kwargs)
        return self.parser

    def parse(self, data):
        """Analisa o texto; devolve (matriz numpy ou None, erros)"""
        self.errors.clear()
        self.lexer.input(data)
        result = self.parser.parse(lexer=self.lexer.lexer)
        errors = self.lexer.errors + self.errors
        if result is None and not errors:
            errors.append(self._error(1, 1, 'Erro Sintático', 'EOF', '',
                                      "Literal vazio", "Escreva uma matriz, ex.: [1 0; 0 1]"))
        if errors:
            return None, errors
        return result, errors

    def _error(self, linha, coluna, tipo, token, valor, mensagem, sugestao):
        return {
            'linha': linha,
            'coluna': coluna,
            'tipo': tipo,
            'token': token,
            'valor': valor,
            'mensagem': mensagem,
            'sugestao': sugestao,
        }

    def _semantic(self, p, n, mensagem, sugestao):
        """Registra erro semântico na posição do símbolo terminal n"""
        self.errors.append(self._error(
            p.lineno(n), column_of(self.lexer._data, p.lexpos(n)), 'Erro Semântico',
            p.slice[n].type, p[n], mensagem, sugestao))

    # ========================================================================
    # REGRAS DE PRODUÇÃO
    # ========================================================================

    # Regra inicial
    def p_expr(self, p):
        '''expr : term
                | MINUS expr %prec UMINUS
                | PLUS expr %prec UMINUS'''
        if len(p) == 2:
            p[0] = p[1]
        elif p[2] is None:
            p[0] = None
        else:
            p[0] = -p[2] if p[1] == '-' else p[2]

    def p_term(self, p):
        '''term : primary
                | term QUOTE'''
        if len(p) == 2:
            p[0] = p[1]
        else:
            p[0] = None if p[1] is None else p[1].T.copy()

    def p_primary(self, p):
        '''primary : matrix
                   | call
                   | number
                   | LPAREN expr RPAREN'''
        if len(p) == 2:
            value = p[1]
            p[0] = np.array([[value]], dtype=float) if isinstance(value, float) else value
        else:
            p[0] = p[2]

    # Matriz por linhas: [1 2; 3 4]
    def p_matrix_rows(self, p):
        '''matrix : LBRACKET rows RBRACKET'''
        p[0] = self._assemble(p, p[2])

    # Matriz como lista de linhas: [[1, 2], [3, 4]]
    def p_matrix_nested(self, p):
        '''matrix : LBRACKET row_list RBRACKET'''
        p[0] = self._assemble(p, p[2])

    def p_rows(self, p):
        '''rows : row
                | rows SEMI row'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_row_list(self, p):
        '''row_list : LBRACKET row RBRACKET
                    | row_list COMMA LBRACKET row RBRACKET'''
        p[0] = [p[2]] if len(p) == 4 else p[1] + [p[4]]

    def p_row(self, p):
        '''row : scalar
               | row scalar
               | row COMMA scalar'''
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            p[0] = p[1] + [p[len(p) - 1]]

    def p_scalar(self, p):
        '''scalar : number
                  | MINUS number
                  | PLUS number'''
        if len(p) == 2:
            p[0] = p[1]
        else:
            p[0] = -p[2] if p[1] == '-' else p[2]

    def p_number(self, p):
        '''number : NUMBER
                  | NUMBER SLASH NUMBER'''
        if len(p) == 2:
            p[0] = float(p[1])
        elif p[3] == 0:
            self._semantic(p, 3, f"Divisão por zero em {p[1]}/{p[3]}",
                           "O denominador de uma fração deve ser diferente de zero")
            p[0] = float('nan')
        else:
            p[0] = p[1] / p[3]

    def p_call_square(self, p):
        '''call : EYE LPAREN NUMBER RPAREN
                | JAVG LPAREN NUMBER RPAREN'''
        n = self._size_arg(p, 3)
        if n is None:
            p[0] = None
        elif p.slice[1].type == 'EYE':
            p[0] = np.eye(n)
        else:
            p[0] = j_mat(n)

    def p_call_shape(self, p):
        '''call : ONES LPAREN NUMBER COMMA NUMBER RPAREN
                | ZEROS LPAREN NUMBER COMMA NUMBER RPAREN'''
        m, n = self._size_arg(p, 3), self._size_arg(p, 5)
        if m is None or n is None:
            p[0] = None
        else:
            fill = 1.0 if p.slice[1].type == 'ONES' else 0.0
            p[0] = np.full((m, n), fill)

    def p_call_kron(self, p):
        '''call : KRON LPAREN expr COMMA expr RPAREN'''
        if p[3] is None or p[5] is None:
            p[0] = None
        else:
            p[0] = np.kron(p[3], p[5])

    def _size_arg(self, p, n):
        value = p[n]
        if not isinstance(value, int) or value < 1:
            self._semantic(p, n, f"Argumento {value!r} de {p[1]} deve ser inteiro positivo",
                           BUILTIN_SIGNATURES[p.slice[1].type])
            return None
        check_size(value, value)
        return value

    def _assemble(self, p, rows):
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            counts = ', '.join(str(len(r)) for r in rows)
            self._semantic(p, 1, f"Linhas com tamanhos diferentes ({counts})",
                           "Todas as linhas de uma matriz devem ter o mesmo número de elementos")
            return None
        return np.array(rows, dtype=float)

    # ========================================================================
    # TRATAMENTO DE ERROS
    # ========================================================================

    def p_error(self, p):
        """Tratamento de erros sintáticos"""
        if p:
            error = self._error(
                p.lineno, column_of(self.lexer._data, p.lexpos), 'Erro Sintático',
                p.type, p.value,
                f"Sintaxe inválida: token inesperado '{p.value}' (tipo: {p.type})",
                self._get_error_suggestion(p))
            self.errors.append(error)

            # Tentar recuperar do erro
            self.parser.errok()
        else:
            self.errors.append(self._error(
                -1, -1, 'Erro Sintático', 'EOF', '', "Fim do literal inesperado",
                "Verifique se todos os colchetes e parênteses foram fechados"))

    def _get_error_suggestion(self, p):
        """Gera sugestões de correção baseadas no tipo de erro"""
        token_type = p.type
        token_value = p.value

        suggestions = {
            'IDENT': f"Nome '{token_value}' desconhecido. Construtores disponíveis: "
                     + ', '.join(sorted(BUILTINS)),

            'RBRACKET': "Colchete ']' inesperado. Possíveis problemas:\n"
                        "  • Matriz vazia '[]'\n"
                        "  • Separador ';' ou ',' sobrando antes de ']'\n"
                        "  • Colchete de fechamento extra",

            'LBRACKET': "Colchete '[' inesperado. Use:\n"
                        "  • [1 2; 3 4] para linhas separadas por ';'\n"
                        "  • [[1, 2], [3, 4]] para lista de linhas (sem misturar as formas)",

            'SEMI': "';' fora de contexto. Use ';' apenas para separar linhas dentro de [ ]",

            'COMMA': "',' fora de contexto. Vírgulas separam elementos de uma linha,\n"
                     "  linhas de uma lista [[..], [..]] ou argumentos de construtores",

            'SLASH': "'/' só é aceito em frações de números, ex.: 2/3",

            'QUOTE': "Transposição ' deve vir depois de uma matriz, ex.: [1 2]'",

            'RPAREN': "Parêntese ')' inesperado. Verifique os argumentos do construtor",

            'NUMBER': f"Número '{token_value}' fora de contexto. Elementos de matriz ficam entre [ ];\n"
                      f"  argumentos de construtores são inteiros, ex.: ones(2, 3)",
        }
        if token_type in BUILTIN_SIGNATURES:
            return f"Construtor fora de contexto. Uso: {BUILTIN_SIGNATURES[token_type]}"

        return suggestions.get(token_type,
                               f"Token '{token_value}' (tipo: {token_type}) não esperado neste contexto.\n"
                               f"  💡 Consulte a gramática com 'crossdim grammar'.")


# MatrixParser guarda erros e estado do lexer: um parser por thread
_local = threading.local()


def _default_parser():
    parser = getattr(_local, 'parser', None)
    if parser is None:
        lexer = MatrixLexer()
        lexer.build()
        parser = MatrixParser(lexer)
        parser.build()
        _local.parser = parser
    return parser


def parse_matrix(text):
    """Converte um literal em matriz 2-D; levanta LiteralError com todos os erros"""
    result, errors = _default_parser().parse(text)
    if errors:
        raise LiteralError(errors)
    if result.size == 0 or not np.all(np.isfinite(result)):
        raise LiteralError([{
            'linha': 1, 'coluna': 1, 'tipo': 'Erro Semântico', 'token': '', 'valor': text,
            'mensagem': "Matriz vazia ou com entradas não finitas",
            'sugestao': "Use apenas números finitos"}])
    return result
