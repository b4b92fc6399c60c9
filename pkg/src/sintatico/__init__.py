"""
Módulo de Análise Sintática
"""
from .grammar import MATRIX_GRAMMAR
from .parser import MatrixParser, parse_matrix

__all__ = ['MATRIX_GRAMMAR', 'MatrixParser', 'parse_matrix']
