"""
Dinâmica transitória com variação de dimensão

Os modelos Σ₁ (ℝᵖ) e Σ₂ (ℝ^q) são projetados em ℝⁿ, n = p ∨ q, e
misturados por μ(t). O controle de mínima energia leva z(t0) = x(t0) ⊗ 𝟏
até um ponto de ℝ^q ⊗ 𝟏_{n/q}, realizando o transiente de dimensão.
"""
import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import NamedTuple, Optional, Tuple, Union

import control as ct
import numpy as np
import scipy.integrate
import scipy.linalg

from ..config import DEFAULT_DT, DEFAULT_RANK_TOL, DEFAULT_TOL
from ..dinamica.dynamics import rk4_solve, simulate_continuous, time_grid
from ..dinamica.trajectory import Trajectory
from ..erros import InvalidValueError, TransienceError
from ..espaco.vspace import vdist
from ..nucleo.stp import as_mat, as_vec, kron, lcm, ones_vec
from ..projecao.projection import project_input, project_sysmatrix, project_vector
from ..projecao.sistema import LinSys
from ..quociente.quotient import VecClass, has_member_in, reduce_vector

logger = logging.getLogger(__name__)

# Alvo livre: qualquer ponto de ℝ^q ⊗ 𝟏_{n/q}
SUBSPACE = 'subspace'


# ============================================================================
# AGENDA μ(t)
# ============================================================================

class MuKind(str, Enum):
    CONSTANT = 'constant'
    LINEAR = 'linear'


@dataclass(frozen=True)
class MuSchedule:
    """
    Peso μ entre o modelo anterior (μ) e o posterior (1 − μ).

    constant: μ em (0, 1) fixo
    linear:   μ(t0) = 1 decrescendo até μ(te) = 0
    """

    kind: MuKind
    value: Optional[float] = None
    t0: Optional[float] = None
    te: Optional[float] = None

    def __post_init__(self):
        kind = MuKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        if kind is MuKind.CONSTANT:
            if self.value is None or not 0.0 < float(self.value) < 1.0:
                raise InvalidValueError(f"μ constante deve estar em (0, 1), recebido {self.value}")
        else:
            if self.t0 is None or self.te is None or not float(self.te) > float(self.t0):
                raise InvalidValueError(
                    f"μ linear exige te > t0, recebido t0={self.t0}, te={self.te}")

    @classmethod
    def constant(cls, value):
        return cls(MuKind.CONSTANT, value=float(value))

    @classmethod
    def linear(cls, t0, te):
        return cls(MuKind.LINEAR, t0=float(t0), te=float(te))

    @classmethod
    def constant_from_masses(cls, m1, m2):
        """Conservação do momento: μ = m₁ / (m₁ + m₂)"""
        m1, m2 = float(m1), float(m2)
        if m1 <= 0 or m2 <= 0:
            raise InvalidValueError(f"massas formais devem ser positivas: {m1}, {m2}")
        return cls.constant(m1 / (m1 + m2))

    def __call__(self, t):
        if self.kind is MuKind.CONSTANT:
            return self.value
        span = self.te - self.t0
        mu = (span - (float(t) - self.t0)) / span
        return min(1.0, max(0.0, mu))


# ============================================================================
# CENÁRIO
# ============================================================================

@dataclass(frozen=True, eq=False)
class TransientScenario:
    """
    Transiente de Σ₁ (ℝᵖ) para Σ₂ (ℝ^q) em [t0, te].

    target é um vetor de ℝⁿ já em ℝ^q ⊗ 𝟏_{n/q} ou SUBSPACE.
    shared_input: os dois modelos recebem a mesma entrada física u.
    """

    sigma1: LinSys
    sigma2: LinSys
    t0: float
    te: float
    mu: MuSchedule
    x_t0: np.ndarray
    target: Union[np.ndarray, str] = SUBSPACE
    dt: float = DEFAULT_DT
    tol: float = DEFAULT_TOL
    rank_tol: float = DEFAULT_RANK_TOL
    shared_input: bool = False

    def __post_init__(self):
        if float(self.te) < float(self.t0):
            raise InvalidValueError(f"te={self.te} anterior a t0={self.t0}")
        if float(self.dt) <= 0:
            raise InvalidValueError(f"dt deve ser positivo, recebido {self.dt}")
        x = as_vec(self.x_t0, 'x_t0')
        if x.size != self.sigma1.order:
            raise InvalidValueError(
                f"x_t0 tem dimensão {x.size}, Σ₁ tem ordem {self.sigma1.order}")
        object.__setattr__(self, 'x_t0', x)
        if self.shared_input and self.sigma1.inputs != self.sigma2.inputs:
            raise InvalidValueError(
                f"entrada compartilhada exige o mesmo número de entradas "
                f"({self.sigma1.inputs} != {self.sigma2.inputs})")
        if isinstance(self.target, str):
            if self.target != SUBSPACE:
                raise InvalidValueError(f"alvo desconhecido: {self.target!r}")
        else:
            z = as_vec(self.target, 'target')
            if z.size != self.n:
                raise InvalidValueError(f"alvo tem dimensão {z.size}, esperado n={self.n}")
            if not has_member_in(reduce_vector(z, self.tol), self.q):
                raise InvalidValueError(
                    f"alvo {z.tolist()} não pertence a ℝ^{self.q} ⊗ 𝟏_{self.n // self.q}")
            object.__setattr__(self, 'target', z)

    @property
    def p(self):
        return self.sigma1.order

    @property
    def q(self):
        return self.sigma2.order

    @property
    def n(self):
        return lcm(self.p, self.q)

    @property
    def z0(self):
        """z(t0) = x(t0) ⊗ 𝟏_{n/p}"""
        return np.repeat(self.x_t0, self.n // self.p)

    @property
    def subspace_basis(self):
        """L = I_q ⊗ 𝟏_{n/q}: ℝ^q ⊗ 𝟏_{n/q} = imagem de L"""
        return kron(np.eye(self.q), ones_vec(self.n // self.q))


# ============================================================================
# SISTEMA MISTURADO
# ============================================================================

@dataclass(frozen=True, eq=False)
class Blend:
    """ż = A*(t) z + B*₁(t) u + B*₂(t) v em ℝⁿ"""

    A1: np.ndarray
    A2: np.ndarray
    B1: np.ndarray
    B2: np.ndarray
    mu: MuSchedule
    shared_input: bool = False

    def A(self, t):
        mu = self.mu(t)
        return mu * self.A1 + (1.0 - mu) * self.A2

    def B1_star(self, t):
        return self.mu(t) * self.B1

    def B2_star(self, t):
        return (1.0 - self.mu(t)) * self.B2

    def B(self, t):
        """Entrada conjunta [B*₁ B*₂] (ou B*₁ + B*₂ com entrada compartilhada)"""
        if self.shared_input:
            return self.B1_star(t) + self.B2_star(t)
        return np.hstack([self.B1_star(t), self.B2_star(t)])

    def at(self, t):
        return self.A(t), self.B1_star(t), self.B2_star(t)

    @property
    def order(self):
        return self.A1.shape[0]


def build_blend(scenario):
    """Projeta Σ₁ e Σ₂ em ℝⁿ e monta a mistura por μ"""
    n = scenario.n
    s1, s2 = scenario.sigma1, scenario.sigma2
    logger.info("mistura em ℝ^%d (p=%d, q=%d, μ %s)", n, s1.order, s2.order,
                scenario.mu.kind.value)
    return Blend(
        A1=project_sysmatrix(s1.A, n),
        A2=project_sysmatrix(s2.A, n),
        B1=project_input(s1.input_matrix(), n) if s1.inputs else np.zeros((n, 0)),
        B2=project_input(s2.input_matrix(), n) if s2.inputs else np.zeros((n, 0)),
        mu=scenario.mu,
        shared_input=scenario.shared_input,
    )


# ============================================================================
# CONTROLABILIDADE E GRAMIANO
# ============================================================================

class Controllability(NamedTuple):
    controllable: bool
    rank: int


def numerical_rank(M, rank_tol=DEFAULT_RANK_TOL):
    """Posto pelos valores singulares acima de rank_tol·σ_max"""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return 0
    sv = scipy.linalg.svdvals(M)
    if sv[0] == 0.0:
        return 0
    return int(np.sum(sv > rank_tol * sv[0]))


def is_controllable(A, B, rank_tol=DEFAULT_RANK_TOL):
    """Teste de Kalman: posto de [B, AB, ..., Aⁿ⁻¹B]"""
    A = as_mat(A, 'A')
    B = np.asarray(B, dtype=float)
    B = B.reshape(-1, 1) if B.ndim == 1 else B
    n = A.shape[0]
    if B.shape[0] != n:
        raise InvalidValueError(f"B tem {B.shape[0]} linhas, esperado {n}")
    if B.shape[1] == 0:
        return Controllability(n == 0, 0)
    rank = numerical_rank(ct.ctrb(A, B), rank_tol)
    return Controllability(rank == n, rank)


@dataclass(frozen=True, eq=False)
class GramianResult:
    """
    Gramiano de alcançabilidade W e transição Φ(te, t0).

    psi[i] = Φ(te, τ_i)ᵀ na meia-grade τ (passo dt/2).
    """

    W: np.ndarray
    phi: np.ndarray
    half_times: np.ndarray
    psi: Tuple[np.ndarray, ...]


def ltv_gramian(A_of, B_of, t0, te, dt=DEFAULT_DT):
    """
    W = ∫ Φ(te,τ) B(τ) B(τ)ᵀ Φ(te,τ)ᵀ dτ para ż = A(t) z + B(t) u.

    Ψ(τ) = Φ(te,τ)ᵀ resolve dΨ/dτ = −A(τ)ᵀ Ψ, Ψ(te) = I, integrada por RK4
    de te para t0 na meia-grade; a integral usa Simpson em cada passo dt.
    """
    times = time_grid(t0, te, dt)
    steps = len(times) - 1
    half = np.linspace(times[0], times[-1], 2 * steps + 1)
    n = A_of(times[0]).shape[0]

    backward = rk4_solve(lambda t, P: -A_of(t).T @ P, np.eye(n), half[::-1])
    psi = tuple(backward[::-1])

    W = np.zeros((n, n))
    if steps:
        M = [B_of(t).T @ P for t, P in zip(half, psi)]
        W = scipy.integrate.simpson(np.stack([m.T @ m for m in M]), x=half, axis=0)
    W = 0.5 * (W + W.T)
    return GramianResult(W=W, phi=psi[0].T, half_times=half, psi=psi)


def gramian(scenario, blend=None):
    """Gramiano do sistema misturado do cenário"""
    blend = blend or build_blend(scenario)
    return ltv_gramian(blend.A, blend.B, scenario.t0, scenario.te, scenario.dt)


# ============================================================================
# CONTROLE DE MÍNIMA ENERGIA
# ============================================================================

@dataclass(frozen=True, eq=False)
class ControlDesign:
    """Controle de malha aberta u(τ) = B(τ)ᵀ Φ(te,τ)ᵀ W⁺ (z_alvo − Φ z0)"""

    z0: np.ndarray
    z_target: np.ndarray
    predicted: np.ndarray
    residual: float
    gramian: GramianResult
    blend: Blend
    costate: np.ndarray
    gramian_rank: int
    _half_inputs: np.ndarray = field(repr=False, default=None)

    def u(self, t):
        """Entrada conjunta no instante t (nós da meia-grade ou interpolação linear)"""
        half = self.gramian.half_times
        if half.size == 1:
            return self._half_inputs[0]
        pos = (float(t) - half[0]) / (half[1] - half[0])
        i = int(round(pos))
        if abs(pos - i) < 1e-6 and 0 <= i < half.size:
            return self._half_inputs[i]
        i = min(max(int(math.floor(pos)), 0), half.size - 2)
        w = min(max(pos - i, 0.0), 1.0)
        return (1.0 - w) * self._half_inputs[i] + w * self._half_inputs[i + 1]

    @property
    def energy(self):
        """‖u‖² integrada = (z_alvo − Φz0)ᵀ W⁺ (z_alvo − Φz0)"""
        d = self.z_target - self.gramian.phi @ self.z0
        return float(d @ self.costate)


def subspace_target(scenario, endpoint, W=None):
    """
    Ponto de ℝ^q ⊗ 𝟏_{n/q} mais próximo de `endpoint` (mínimos quadrados em y).

    Com o Gramiano W, só valem alvos L·y com L·y − endpoint ∈ imagem(W).
    Sem alvo alcançável, devolve a projeção euclidiana.
    """
    L = scenario.subspace_basis
    y, *_ = np.linalg.lstsq(L, endpoint, rcond=None)
    if W is None:
        return L @ y
    U = scipy.linalg.orth(W, rcond=scenario.rank_tol)
    N = np.eye(W.shape[0]) - U @ U.T
    M, b = N @ L, N @ endpoint
    y0, *_ = np.linalg.lstsq(M, b, rcond=None)
    if np.linalg.norm(M @ y0 - b) > scenario.tol:
        logger.debug("nenhum ponto de ℝ^%d ⊗ 𝟏 é alcançável", scenario.q)
        return L @ y
    K = scipy.linalg.null_space(M, rcond=scenario.rank_tol)
    if K.size:
        c, *_ = np.linalg.lstsq(L @ K, endpoint - L @ y0, rcond=None)
        y0 = y0 + K @ c
    return L @ y0


def min_energy_control(scenario, blend=None):
    """
    Projeta o controle de mínima energia para o cenário.

    Levanta TransienceError quando o alvo não é alcançável a partir de z(t0)
    (resíduo do Gramiano acima de scenario.tol).
    """
    blend = blend or build_blend(scenario)
    g = gramian(scenario, blend)
    z0 = scenario.z0
    drift = g.phi @ z0
    if isinstance(scenario.target, str):
        z_target = subspace_target(scenario, drift, g.W)
    else:
        z_target = scenario.target

    W_pinv = scipy.linalg.pinvh(g.W, atol=0.0, rtol=scenario.rank_tol) if np.any(g.W) \
        else np.zeros_like(g.W)
    rank = numerical_rank(g.W, scenario.rank_tol)
    costate = W_pinv @ (z_target - drift)
    predicted = drift + g.W @ costate
    residual = float(np.linalg.norm(predicted - z_target))
    logger.info("gramiano com posto %d/%d, resíduo previsto %.3g", rank, g.W.shape[0], residual)
    if rank < g.W.shape[0]:
        logger.info("gramiano singular; usando pseudo-inversa truncada")
    if residual > scenario.tol:
        raise TransienceError(
            f"alvo fora do conjunto alcançável a partir de z(t0): resíduo {residual:.3g} "
            f"> tolerância {scenario.tol:g}", residual)

    half_inputs = np.vstack([blend.B(t).T @ (P @ costate)
                             for t, P in zip(g.half_times, g.psi)])
    return ControlDesign(z0=z0, z_target=z_target, predicted=predicted,
                         residual=residual, gramian=g, blend=blend, costate=costate,
                         gramian_rank=rank, _half_inputs=half_inputs)


# ============================================================================
# REALIZAÇÃO DO TRANSIENTE
# ============================================================================

@dataclass(frozen=True, eq=False)
class TransienceResult:
    """Trajetória em ℝⁿ, controles amostrados e veredito"""

    trajectory: Trajectory
    controls: np.ndarray
    z_target: np.ndarray
    z_te: np.ndarray
    y_te: np.ndarray
    reduced: VecClass
    distance: float
    realized: bool
    design: Optional[ControlDesign] = None
    reason: str = ''


def realize_transience(scenario, label='transiente'):
    """Simula ż = A*(t) z + B(t) u(t) com o controle projetado e dá o veredito"""
    blend = build_blend(scenario)
    design, reason = None, ''
    try:
        design = min_energy_control(scenario, blend)
        u = design.u
        z_target = design.z_target
    except TransienceError as exc:
        logger.warning("transiente não realizável: %s", exc)
        reason = str(exc)
        width = blend.B(scenario.t0).shape[1]
        u = lambda t: np.zeros(width)  # noqa: E731
        if isinstance(scenario.target, str):
            z_target = subspace_target(scenario, scenario.z0)
        else:
            z_target = scenario.target

    traj = simulate_continuous(blend.A, scenario.z0, scenario.t0, scenario.te,
                               scenario.dt, B=blend.B, u=u, label=label)
    z_te = traj.final
    reduced = reduce_vector(z_te, scenario.tol)
    distance = vdist(z_te, z_target)
    member = has_member_in(reduced, scenario.q)
    realized = design is not None and member and distance <= scenario.tol
    if design is not None and not realized:
        reason = (f"z(te) a distância {distance:.3g} do alvo" if member
                  else f"z(te) reduz para dimensão {reduced.dim}, que não divide q={scenario.q}")
    logger.info("transiente %s: d(z(te), alvo) = %.3g",
                'realizado' if realized else 'NÃO realizado', distance)
    controls = np.vstack([np.atleast_1d(u(t)) for t in traj.times])
    return TransienceResult(
        trajectory=traj, controls=controls, z_target=z_target, z_te=z_te,
        y_te=project_vector(z_te, scenario.q), reduced=reduced, distance=distance,
        realized=realized, design=design, reason=reason)


def with_initial_state(scenario, x_t0):
    """Cópia do cenário partindo de outro x(t0)"""
    return replace(scenario, x_t0=as_vec(x_t0, 'x_t0'))
