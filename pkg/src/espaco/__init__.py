"""
Espaço de estados livre de dimensão
"""

from .vspace import expand, path, vadd, vdist, vinner, vnorm, vscale, vsub

__all__ = ['expand', 'path', 'vadd', 'vdist', 'vinner', 'vnorm', 'vscale', 'vsub']
