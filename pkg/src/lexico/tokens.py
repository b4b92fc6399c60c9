"""
Definições de tokens e palavras reservadas da linguagem de literais de matriz
"""

# Construtores de matrizes (funções embutidas)
BUILTINS = {
    'I': 'EYE',
    'eye': 'EYE',
    'J': 'JAVG',
    'ones': 'ONES',
    'zeros': 'ZEROS',
    'kron': 'KRON',
}

# Assinatura de cada construtor, usada nas mensagens de erro
BUILTIN_SIGNATURES = {
    'EYE': 'I(n): identidade n x n',
    'JAVG': 'J(k): bloco de média (1/k)·𝟏_{k x k}',
    'ONES': 'ones(m, n): matriz m x n de uns',
    'ZEROS': 'zeros(m, n): matriz m x n de zeros',
    'KRON': 'kron(M, N): produto de Kronecker',
}

RESERVED = dict(BUILTINS)

# Lista de tokens
TOKENS = [
    # Símbolos especiais
    'LBRACKET',         # [
    'RBRACKET',         # ]
    'LPAREN',           # (
    'RPAREN',           # )
    'COMMA',            # ,
    'SEMI',             # ;
    'SLASH',            # /
    'MINUS',            # -
    'PLUS',             # +
    'QUOTE',            # ' (transposição)

    # Literais
    'NUMBER',

    # Identificador desconhecido (sempre erro no parser)
    'IDENT',
] + sorted(set(RESERVED.values()))
