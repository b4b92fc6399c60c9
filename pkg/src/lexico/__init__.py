"""
Módulo de Análise Léxica
"""
from .lexico import MatrixLexer, column_of

__all__ = ['MatrixLexer', 'column_of']
