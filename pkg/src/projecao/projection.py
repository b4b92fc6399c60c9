"""
Projeções entre ℝᵐ e ℝⁿ

Matriz Π^m_n, projeção de vetores por mínimos quadrados e projeção de
matrizes de sistema, de saída e de sistemas de controle completos.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from ..erros import ProjectionError
from ..nucleo.stp import as_mat, as_vec, check_size, kron, lcm, ones_vec
from .sistema import LinSys

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Projector:
    """Π^m_n (n x m) com t = m ∨ n, α = t/m, β = t/n"""

    m: int
    n: int
    mat: np.ndarray

    @property
    def t(self):
        return lcm(self.m, self.n)

    @property
    def alpha(self):
        return self.t // self.m

    @property
    def beta(self):
        return self.t // self.n

    def apply(self, xi):
        """Π^m_n ξ"""
        return self.mat @ as_vec(xi, 'ξ')


@lru_cache(maxsize=256)
def _pi_cached(m, n):
    t = lcm(m, n)
    alpha, beta = t // m, t // n
    check_size(t, m)
    # (1/β)(I_n ⊗ 𝟏_βᵀ)(I_m ⊗ 𝟏_α)
    left = kron(np.eye(n), ones_vec(beta).T)
    right = kron(np.eye(m), ones_vec(alpha))
    mat = (left @ right) / beta
    mat.setflags(write=False)
    return mat


def pi_matrix(m, n):
    """Constrói o projetor Π^m_n"""
    lcm(m, n)  # valida m, n
    return Projector(int(m), int(n), _pi_cached(int(m), int(n)))


def project_vector(xi, n):
    """Projeção de ξ em ℝⁿ: médias de blocos de ξ ⊗ 𝟏_α"""
    xi = as_vec(xi, 'ξ')
    if xi.size == n:
        return xi.copy()
    return pi_matrix(xi.size, n).apply(xi)


# ============================================================================
# SOLUÇÕES DAS EQUAÇÕES NORMAIS
# ============================================================================

def _right_solve(M, G):
    """M·G⁻¹ para G simétrica definida positiva (via Cholesky)"""
    try:
        factor = scipy.linalg.cho_factor(G)
    except np.linalg.LinAlgError as exc:
        raise ProjectionError(f"matriz normal singular ({G.shape}): {exc}") from exc
    return scipy.linalg.cho_solve(factor, M.T).T


def _normal_branch(P):
    """Escolhe o ramo de (4.6): linhas completas (m >= n) ou colunas completas"""
    n, m = P.shape
    return m >= n


def project_sysmatrix(A, n):
    """
    Projeção de mínimos quadrados A_π de uma matriz de sistema m x m.

    m >= n: Π A Πᵀ (Π Πᵀ)⁻¹
    m <  n: Π A (ΠᵀΠ)⁻¹ Πᵀ
    """
    A = as_mat(A, 'A')
    m = A.shape[0]
    if A.shape[1] != m:
        raise ProjectionError(f"A deve ser quadrada, recebido {A.shape}")
    if m == n:
        return A.copy()
    P = pi_matrix(m, n).mat
    if _normal_branch(P):
        return _right_solve(P @ A @ P.T, P @ P.T)
    return _right_solve(P @ A, P.T @ P) @ P.T


def project_output(C, n):
    """
    Projeção da matriz de saída C (p x m).

    m >= n: C Πᵀ (Π Πᵀ)⁻¹
    m <  n: C (ΠᵀΠ)⁻¹ Πᵀ
    """
    C = as_mat(C, 'C')
    m = C.shape[1]
    if m == n:
        return C.copy()
    P = pi_matrix(m, n).mat
    if _normal_branch(P):
        return _right_solve(C @ P.T, P @ P.T)
    return _right_solve(C, P.T @ P) @ P.T


def project_input(B, n):
    """Π^m_n B, sem correção de mínimos quadrados"""
    B = as_mat(B, 'B')
    m = B.shape[0]
    if m == n:
        return B.copy()
    return pi_matrix(m, n).mat @ B


def project_system(sys, n):
    """Sistema aproximado por mínimos quadrados em ℝⁿ"""
    logger.debug("projetando sistema de ordem %d para %d", sys.order, n)
    return LinSys(
        A=project_sysmatrix(sys.A, n),
        B=None if sys.B is None else project_input(sys.B, n),
        C=None if sys.C is None else project_output(sys.C, n),
        time_kind=sys.time_kind,
    )
