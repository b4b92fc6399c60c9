"""
Núcleo de álgebra densa para produtos semi-tensoriais (STP)

Produto de Kronecker, vetores de uns, blocos de média J_k, mmc/mdc,
primeiro e segundo STP, produto MV-2 e norma espectral.
Todas as funções são puras e recebem/devolvem arrays numpy.
"""
import logging
import math
import sys

import numpy as np
import scipy.linalg

from ..erros import DimensionOverflowError, InvalidValueError, NumericalError

logger = logging.getLogger(__name__)

# Maior tamanho aceito para qualquer dimensão ou contagem de entradas
MAX_SIZE = sys.maxsize


# ============================================================================
# CONSTRUTORES VALIDADOS
# ============================================================================

def as_mat(a, name='matriz'):
    """
    Converte para matriz real 2-D, rejeitando NaN/Inf.

    Escalares viram 1x1 e sequências 1-D viram uma linha.
    """
    arr = np.array(a, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1)
    elif arr.ndim != 2:
        raise InvalidValueError(f"{name}: esperado array 2-D, recebido {arr.ndim}-D")
    if arr.size == 0:
        raise InvalidValueError(f"{name}: matriz vazia")
    if not np.all(np.isfinite(arr)):
        raise InvalidValueError(f"{name}: entradas não finitas")
    return arr


def as_vec(x, name='vetor'):
    """Converte para vetor real 1-D (colunas n x 1 e linhas 1 x n são achatadas)"""
    arr = np.array(x, dtype=float)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    elif arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise InvalidValueError(f"{name}: esperado vetor, recebido shape {arr.shape}")
    if arr.size == 0:
        raise InvalidValueError(f"{name}: vetor vazio")
    if not np.all(np.isfinite(arr)):
        raise InvalidValueError(f"{name}: entradas não finitas")
    return arr


def _positive(n, name):
    if isinstance(n, (bool, np.bool_)) or not isinstance(n, (int, np.integer)):
        raise InvalidValueError(f"{name} deve ser inteiro, recebido {n!r}")
    if n < 1:
        raise InvalidValueError(f"{name} deve ser >= 1, recebido {n}")
    return int(n)


def check_size(*sizes):
    """Garante que dimensões e o número de entradas cabem no inteiro da plataforma"""
    total = 1
    for s in sizes:
        if s > MAX_SIZE:
            raise DimensionOverflowError(f"dimensão {s} excede {MAX_SIZE}")
        total *= s
    if total > MAX_SIZE:
        raise DimensionOverflowError(f"resultado com {total} entradas excede {MAX_SIZE}")


# ============================================================================
# ARITMÉTICA DE DIMENSÕES
# ============================================================================

def lcm(m, n):
    """Mínimo múltiplo comum m ∨ n"""
    m, n = _positive(m, 'm'), _positive(n, 'n')
    t = math.lcm(m, n)
    check_size(t)
    return t


def gcd(m, n):
    """Máximo divisor comum m ∧ n"""
    return math.gcd(_positive(m, 'm'), _positive(n, 'n'))


def divisors(n):
    """Divisores de n em ordem crescente"""
    n = _positive(n, 'n')
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# ============================================================================
# BLOCOS BÁSICOS
# ============================================================================

def ones_vec(n):
    """Vetor coluna 𝟏_n (n x 1)"""
    return np.ones((_positive(n, 'n'), 1))


def ones_mat(n):
    """Matriz 𝟏_{n x n}"""
    n = _positive(n, 'n')
    return np.ones((n, n))


def j_mat(k):
    """Bloco de média J_k = (1/k)·𝟏_{k x k}"""
    k = _positive(k, 'k')
    return np.full((k, k), 1.0 / k)


def kron(A, B):
    """Produto de Kronecker com verificação de tamanho"""
    A, B = as_mat(A, 'A'), as_mat(B, 'B')
    check_size(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])
    return np.kron(A, B)


# ============================================================================
# PRODUTOS SEMI-TENSORIAIS
# ============================================================================

def stp1(A, B):
    """Primeiro STP: (A ⊗ I_{t/n})(B ⊗ I_{t/p}) com t = n ∨ p"""
    A, B = as_mat(A, 'A'), as_mat(B, 'B')
    n, p = A.shape[1], B.shape[0]
    if n == p:
        return A @ B
    t = lcm(n, p)
    check_size(t * A.shape[0] // n, t * B.shape[1] // p)
    return kron(A, np.eye(t // n)) @ kron(B, np.eye(t // p))


def stp2(A, B):
    """Segundo STP (A ∘ B): (A ⊗ J_{t/n})(B ⊗ J_{t/p}) com t = n ∨ p"""
    A, B = as_mat(A, 'A'), as_mat(B, 'B')
    n, p = A.shape[1], B.shape[0]
    if n == p:
        return A @ B
    t = lcm(n, p)
    check_size(t * A.shape[0] // n, t * B.shape[1] // p)
    logger.debug("stp2 %s x %s com t=%d", A.shape, B.shape, t)
    return kron(A, j_mat(t // n)) @ kron(B, j_mat(t // p))


def mv2_dim(rows, cols, r):
    """Dimensão de A ⧈ x para A (rows x cols) e x de dimensão r"""
    t = lcm(cols, r)
    return t * rows // cols


def mv2(A, x):
    """Produto MV-2: (A ⊗ J_{t/n})(x ⊗ 𝟏_{t/r}) com t = n ∨ r"""
    A, x = as_mat(A, 'A'), as_vec(x, 'x')
    n, r = A.shape[1], x.size
    if n == r:
        return A @ x
    t = lcm(n, r)
    check_size(t, t * A.shape[0] // n)
    return kron(A, j_mat(t // n)) @ np.repeat(x, t // r)


# ============================================================================
# NORMA ESPECTRAL
# ============================================================================

def spectral_norm(A):
    """√σ_max(AᵀA), calculada pelos valores singulares"""
    A = as_mat(A, 'A')
    try:
        sv = scipy.linalg.svdvals(A)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalError(f"SVD não convergiu: {exc}") from exc
    return float(sv[0])
