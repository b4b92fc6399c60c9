"""
Espaços quociente de vetores e matrizes
"""

from .quotient import (MatClass, QuotientSystem, VecClass, VecMatClass,
                       class_action, class_add, class_dist, class_mul,
                       class_norm, class_opnorm, class_scale, class_sub,
                       has_member_in, lift_matrix, lift_system, lift_vecmat,
                       lift_vector, mat_equivalent, reduce_matrix, reduce_vecmat,
                       reduce_vector, system_class, systems_equivalent,
                       vec_equivalent, vecmat_equivalent)

__all__ = ['MatClass', 'QuotientSystem', 'VecClass', 'VecMatClass',
           'class_action', 'class_add', 'class_dist', 'class_mul', 'class_norm',
           'class_opnorm', 'class_scale', 'class_sub', 'has_member_in',
           'lift_matrix', 'lift_system', 'lift_vecmat', 'lift_vector',
           'mat_equivalent', 'reduce_matrix', 'reduce_vecmat', 'reduce_vector',
           'system_class', 'systems_equivalent', 'vec_equivalent',
           'vecmat_equivalent']
