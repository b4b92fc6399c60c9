"""
Execução em três fases: Σ₁ com realimentação, transiente, Σ₂ com realimentação
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import DEFAULT_BOUNDARY_TOL
from ..dinamica.dynamics import simulate_continuous
from ..dinamica.trajectory import concat
from ..erros import InvalidValueError, PhaseBoundaryError
from ..nucleo.stp import as_mat, as_vec
from ..projecao.sistema import LinSys
from .transient import realize_transience, with_initial_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Reference:
    """Referência afim r(t) = r0 + (t − t_start)·rate"""

    r0: np.ndarray
    rate: Optional[np.ndarray] = None

    def __post_init__(self):
        r0 = as_vec(self.r0, 'r0')
        rate = np.zeros_like(r0) if self.rate is None else as_vec(self.rate, 'rate')
        if rate.size != r0.size:
            raise InvalidValueError(f"rate tem dimensão {rate.size}, r0 tem {r0.size}")
        object.__setattr__(self, 'r0', r0)
        object.__setattr__(self, 'rate', rate)

    def at(self, t, t_start):
        return self.r0 + (float(t) - t_start) * self.rate


@dataclass(frozen=True, eq=False)
class Phase:
    """
    Sistema sob realimentação estática u = −K (x − r(t)) em [t_start, t_end].

    Sem referência é regulação para a origem.
    """

    system: LinSys
    gain: np.ndarray
    t_start: float
    t_end: float
    reference: Optional[Reference] = None
    x0: Optional[np.ndarray] = None

    def __post_init__(self):
        K = as_mat(self.gain, 'K')
        if K.shape != (self.system.inputs, self.system.order):
            raise InvalidValueError(
                f"ganho K {K.shape} incompatível com o sistema "
                f"({self.system.inputs} entradas, ordem {self.system.order})")
        object.__setattr__(self, 'gain', K)
        if float(self.t_end) < float(self.t_start):
            raise InvalidValueError(f"fase termina ({self.t_end}) antes de começar ({self.t_start})")
        if self.reference is not None and self.reference.r0.size != self.system.order:
            raise InvalidValueError(
                f"referência tem dimensão {self.reference.r0.size}, sistema tem ordem "
                f"{self.system.order}")
        if self.x0 is not None:
            object.__setattr__(self, 'x0', as_vec(self.x0, 'x0'))

    @property
    def closed_loop(self):
        """A − B K"""
        return self.system.A - self.system.B @ self.gain

    @property
    def length(self):
        return float(self.t_end) - float(self.t_start)


def simulate_phase(phase, x0, dt, label):
    """ẋ = (A − BK) x + BK r(t)"""
    A_cl = phase.closed_loop
    if phase.reference is None:
        return simulate_continuous(A_cl, x0, phase.t_start, phase.t_end, dt, label=label)
    BK = phase.system.B @ phase.gain
    ref = phase.reference
    return simulate_continuous(A_cl, x0, phase.t_start, phase.t_end, dt, B=BK,
                               u=lambda t: ref.at(t, phase.t_start), label=label)


@dataclass(frozen=True, eq=False)
class PhasedResult:
    trajectory: object
    transience: object
    pre: object = None
    post: object = None
    boundary_mismatch: float = 0.0


def _tail(traj):
    """Trajetória sem a entrada repetida na fronteira (None se nada sobra)"""
    if traj is None or len(traj) < 2:
        return None
    return traj.drop_first()


def run_phased(pre, scenario, post, boundary_tol=DEFAULT_BOUNDARY_TOL):
    """
    Costura pré-fase, transiente e pós-fase numa trajetória rotulada.

    A pré-fase parte de pre.x0 e precisa terminar em scenario.x_t0 (dentro de
    boundary_tol); o transiente parte do estado alcançado e a pós-fase de y(te).
    Fases de comprimento zero são omitidas.
    """
    if pre.system.order != scenario.p or post.system.order != scenario.q:
        raise InvalidValueError(
            f"fases com ordens ({pre.system.order}, {post.system.order}), "
            f"cenário espera ({scenario.p}, {scenario.q})")
    if abs(pre.t_end - scenario.t0) > boundary_tol or abs(post.t_start - scenario.te) > boundary_tol:
        raise PhaseBoundaryError(
            f"janelas não se encaixam: pré termina em {pre.t_end}, transiente em "
            f"[{scenario.t0}, {scenario.te}], pós começa em {post.t_start}",
            max(abs(pre.t_end - scenario.t0), abs(post.t_start - scenario.te)))

    pre_traj, mismatch = None, 0.0
    if pre.length > 0:
        x0 = pre.x0 if pre.x0 is not None else scenario.x_t0
        logger.info("pré-fase em [%g, %g]", pre.t_start, pre.t_end)
        pre_traj = simulate_phase(pre, x0, scenario.dt, 'pre')
        mismatch = float(np.max(np.abs(pre_traj.final - scenario.x_t0)))
        if mismatch > boundary_tol:
            raise PhaseBoundaryError(
                f"estado ao fim da pré-fase {pre_traj.final.tolist()} difere de "
                f"x(t0)={scenario.x_t0.tolist()} por {mismatch:.3g}", mismatch)
        scenario = with_initial_state(scenario, pre_traj.final)

    result = realize_transience(scenario)
    trans_traj = result.trajectory

    post_traj = None
    if post.length > 0:
        logger.info("pós-fase em [%g, %g] a partir de y(te)=%s",
                    post.t_start, post.t_end, result.y_te.tolist())
        post_traj = simulate_phase(post, result.y_te, scenario.dt, 'pos')

    parts = [pre_traj, _tail(trans_traj) if pre_traj is not None else trans_traj,
             _tail(post_traj)]
    return PhasedResult(trajectory=concat(*parts), transience=result,
                        pre=pre_traj, post=post_traj, boundary_mismatch=mismatch)
