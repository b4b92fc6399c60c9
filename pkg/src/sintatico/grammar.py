"""
Gramática dos literais de matriz em formato BNF (Backus-Naur Form)

Impressa por `crossdim grammar`; as regras correspondem às produções de
MatrixParser.
"""

MATRIX_GRAMMAR = """
# ============================================================================
# GRAMÁTICA DE LITERAIS DE MATRIZ - BNF
# ============================================================================

# Regra inicial
expr ::= term
       | MINUS expr
       | PLUS expr

term ::= primary
       | term QUOTE                       # transposição: M'

primary ::= matrix
          | call
          | number                        # escalar vira matriz 1 x 1
          | LPAREN expr RPAREN

# 1. MATRIZ POR LINHAS: [1 2; 3 4]
matrix ::= LBRACKET rows RBRACKET

rows ::= row
       | rows SEMI row

# 2. MATRIZ COMO LISTA DE LINHAS: [[1, 2], [3, 4]]
matrix ::= LBRACKET row_list RBRACKET

row_list ::= LBRACKET row RBRACKET
           | row_list COMMA LBRACKET row RBRACKET

row ::= scalar
      | row scalar
      | row COMMA scalar

scalar ::= number
         | MINUS number
         | PLUS number

number ::= NUMBER
         | NUMBER SLASH NUMBER           # fração: 2/3

# 3. CONSTRUTORES
call ::= EYE LPAREN NUMBER RPAREN        # I(n) ou eye(n)
       | JAVG LPAREN NUMBER RPAREN       # J(k) = (1/k)·𝟏_{k x k}
       | ONES LPAREN NUMBER COMMA NUMBER RPAREN   # ones(m, n)
       | ZEROS LPAREN NUMBER COMMA NUMBER RPAREN  # zeros(m, n)
       | KRON LPAREN expr COMMA expr RPAREN       # kron(M, N)

# TOKENS
NUMBER ::= DIGITS [ '.' DIGITS ] [ ('e' | 'E') [ '+' | '-' ] DIGITS ]
# comentários começam com '#' e vão até o fim da linha
"""

