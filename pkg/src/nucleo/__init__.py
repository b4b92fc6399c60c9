"""
Núcleo de produtos semi-tensoriais
"""

from .stp import (as_mat, as_vec, check_size, divisors, gcd, j_mat, kron, lcm,
                  mv2, mv2_dim, ones_mat, ones_vec, spectral_norm, stp1, stp2)

__all__ = ['as_mat', 'as_vec', 'check_size', 'divisors', 'gcd', 'j_mat', 'kron',
           'lcm', 'mv2', 'mv2_dim', 'ones_mat', 'ones_vec', 'spectral_norm',
           'stp1', 'stp2']
