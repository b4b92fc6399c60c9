"""
Dinâmica de sistemas lineares entre dimensões
"""

from .dynamics import (OrbitReport, dimension_orbit, is_invariant_dim,
                       operator_vnorm, operator_vnorm_sampled, restricted_matrix,
                       rk4_solve, rk4_step, simulate_continuous,
                       simulate_discrete, step_discrete, time_grid)
from .trajectory import Trajectory, concat, read_csv, write_csv

__all__ = ['OrbitReport', 'Trajectory', 'concat', 'dimension_orbit',
           'is_invariant_dim', 'operator_vnorm', 'operator_vnorm_sampled',
           'read_csv', 'restricted_matrix', 'rk4_solve', 'rk4_step',
           'simulate_continuous', 'simulate_discrete', 'step_discrete',
           'time_grid', 'write_csv']
