"""
Projeções entre espaços de dimensões diferentes
"""

from .projection import (Projector, pi_matrix, project_input, project_output,
                         project_system, project_sysmatrix, project_vector)
from .sistema import LinSys, TimeKind

__all__ = ['LinSys', 'Projector', 'TimeKind', 'pi_matrix', 'project_input',
           'project_output', 'project_system', 'project_sysmatrix',
           'project_vector']
