"""
Simulação de sistemas lineares entre dimensões

Iteração discreta pelo produto MV-2 com acompanhamento da dimensão,
detecção de dimensões invariantes, matriz restrita, integração RK4
em espaço de dimensão fixa e a norma de operador em 𝒱.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..config import DEFAULT_DT, DEFAULT_MAX_STEPS
from ..erros import InvalidValueError, NotInvariantError, NumericalError
from ..espaco.vspace import vnorm
from ..nucleo.stp import (as_mat, as_vec, j_mat, kron, lcm, mv2, mv2_dim,
                          ones_vec, spectral_norm)
from .trajectory import Trajectory

logger = logging.getLogger(__name__)


# ============================================================================
# DINÂMICA DISCRETA
# ============================================================================

def step_discrete(A, x):
    """x(t+1) = A ⧈ x(t)"""
    return mv2(A, x)


@dataclass(frozen=True)
class OrbitReport:
    """
    Órbita do mapa de dimensões r ↦ (n ∨ r)·m/n.

    preperiod/period ficam None quando nenhuma dimensão se repete
    dentro do limite de passos (órbita aberta).
    """

    dims: List[int] = field(default_factory=list)
    preperiod: Optional[int] = None
    period: Optional[int] = None

    @property
    def closed(self):
        return self.period is not None

    @property
    def fixed_dim(self):
        """Dimensão invariante quando a órbita termina num ponto fixo"""
        if self.period == 1:
            return self.dims[self.preperiod]
        return None


def dimension_orbit(A, r0, max_steps=DEFAULT_MAX_STEPS):
    """Itera o mapa de dimensões a partir de r0 e detecta o primeiro ciclo"""
    A = as_mat(A, 'A')
    m, n = A.shape
    seen = {}
    dims = []
    r = int(r0)
    for step in range(max_steps + 1):
        if r in seen:
            first = seen[r]
            logger.debug("órbita de %d: pré-período %d, período %d",
                         r0, first, step - first)
            return OrbitReport(dims, first, step - first)
        seen[r] = step
        dims.append(r)
        r = mv2_dim(m, n, r)
    logger.info("órbita de dimensão aberta após %d passos", max_steps)
    return OrbitReport(dims, None, None)


def is_invariant_dim(A, d):
    A = as_mat(A, 'A')
    m, n = A.shape
    return mv2_dim(m, n, d) == d


def restricted_matrix(A, d):
    """
    Matriz A_* de d x d tal que A ⧈ x = A_* x para todo x em ℝ^d.

    A_* = (A ⊗ J_{t/n})(I_d ⊗ 𝟏_{t/d}), t = n ∨ d
    """
    A = as_mat(A, 'A')
    if not is_invariant_dim(A, d):
        m, n = A.shape
        raise NotInvariantError(
            f"ℝ^{d} não é invariante para A {m}x{n}: "
            f"dimensão seguinte seria {mv2_dim(m, n, d)}")
    n = A.shape[1]
    t = lcm(n, d)
    return kron(A, j_mat(t // n)) @ kron(np.eye(d), ones_vec(t // d))


def simulate_discrete(A, x0, steps, max_steps=DEFAULT_MAX_STEPS):
    """
    Itera x(t+1) = A ⧈ x(t) por `steps` passos.

    Quando a órbita de dimensões chega a um ponto fixo d, os passos em ℝ^d
    usam a matriz restrita A_* (rótulo 'restrito'); os demais usam MV-2
    (rótulo 'mv2').
    """
    A = as_mat(A, 'A')
    x = as_vec(x0, 'x0')
    orbit = dimension_orbit(A, x.size, max_steps)
    fixed = orbit.fixed_dim
    restricted = restricted_matrix(A, fixed) if fixed is not None else None

    states, labels = [x], ['inicial']
    for _ in range(int(steps)):
        if restricted is not None and x.size == fixed:
            x = restricted @ x
            labels.append('restrito')
        else:
            x = mv2(A, x)
            labels.append('mv2')
        if not np.all(np.isfinite(x)):
            raise NumericalError("estado não finito na iteração discreta")
        states.append(x)
    times = tuple(float(k) for k in range(len(states)))
    return Trajectory(times, tuple(states), tuple(labels))


# ============================================================================
# NORMA DE OPERADOR EM 𝒱
# ============================================================================

def operator_vnorm(A):
    """‖A‖_𝒱 = √(n/m)·√σ_max(AᵀA) para A de m x n"""
    A = as_mat(A, 'A')
    m, n = A.shape
    return math.sqrt(n / m) * spectral_norm(A)


def operator_vnorm_sampled(A, samples=1000, rng=None, dims=range(1, 13)):
    """Estimativa do supremo ‖A ⧈ x‖_𝒱 / ‖x‖_𝒱 por amostragem aleatória"""
    A = as_mat(A, 'A')
    rng = np.random.default_rng(rng)
    dims = list(dims)
    best = 0.0
    for _ in range(int(samples)):
        r = dims[rng.integers(len(dims))]
        x = rng.standard_normal(r)
        nx = vnorm(x)
        if nx == 0.0:
            continue
        best = max(best, vnorm(mv2(A, x)) / nx)
    return best


# ============================================================================
# INTEGRAÇÃO CONTÍNUA (RK4 de passo fixo)
# ============================================================================

def time_grid(t0, te, dt=DEFAULT_DT):
    """Grade uniforme de t0 a te com passo <= dt"""
    t0, te, dt = float(t0), float(te), float(dt)
    if dt <= 0:
        raise InvalidValueError(f"dt deve ser positivo, recebido {dt}")
    if te < t0:
        raise InvalidValueError(f"te={te} anterior a t0={t0}")
    if te == t0:
        return np.array([t0])
    steps = max(1, math.ceil((te - t0) / dt - 1e-9))
    return np.linspace(t0, te, steps + 1)


def rk4_step(f, t, y, h):
    """Um passo clássico de Runge-Kutta de quarta ordem"""
    k1 = f(t, y)
    k2 = f(t + h / 2, y + h / 2 * k1)
    k3 = f(t + h / 2, y + h / 2 * k2)
    k4 = f(t + h, y + h * k3)
    return y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def rk4_solve(f, y0, times):
    """Integra y' = f(t, y) sobre a grade dada; devolve um array por instante"""
    y = np.array(y0, dtype=float)
    out = [y]
    for a, b in zip(times[:-1], times[1:]):
        y = rk4_step(f, a, y, b - a)
        if not np.all(np.isfinite(y)):
            raise NumericalError(f"integração divergiu em t={b:g}")
        out.append(y)
    return out


def _as_time_function(M, name):
    """Aceita matriz constante ou função t -> matriz"""
    if M is None or callable(M):
        return M
    M = as_mat(M, name)
    return lambda t: M


def simulate_continuous(A_sq, x0, t0, te, dt=DEFAULT_DT, B=None, u=None, label=None):
    """
    Integra ẋ = A x (+ B u(t)) por RK4 de passo fixo.

    A_sq e B podem ser constantes ou funções do tempo; u é uma função t -> vetor.
    Fluxos com A não quadrada precisam antes ser restritos (restricted_matrix).
    """
    x0 = as_vec(x0, 'x0')
    if not callable(A_sq):
        A_const = as_mat(A_sq, 'A')
        if A_const.shape[0] != A_const.shape[1]:
            raise InvalidValueError(
                f"A {A_const.shape} não é quadrada; restrinja a uma dimensão "
                "invariante com restricted_matrix antes de integrar")
        if A_const.shape[0] != x0.size:
            raise InvalidValueError(
                f"x0 tem dimensão {x0.size}, A tem ordem {A_const.shape[0]}")
    A_of = _as_time_function(A_sq, 'A')
    B_of = _as_time_function(B, 'B')

    if B_of is not None and u is not None:
        def rhs(t, x):
            return A_of(t) @ x + B_of(t) @ np.atleast_1d(u(t))
    else:
        def rhs(t, x):
            return A_of(t) @ x

    times = time_grid(t0, te, dt)
    states = rk4_solve(rhs, x0, times)
    labels = None if label is None else (label,) * len(states)
    return Trajectory(tuple(times), tuple(states), labels)
