"""
Cenários de referência usados pelos testes e pelos arquivos em scenarios/
"""
import numpy as np

from ..projecao.sistema import LinSys
from .phased import Phase, Reference
from .transient import MuSchedule, TransientScenario

# Duplo integrador (ℝ²) e sistema de terceira ordem (ℝ³)
A_DOUBLE_INTEGRATOR = np.array([[0.0, 1.0], [0.0, 0.0]])
B_DOUBLE_INTEGRATOR = np.array([[0.0], [1.0]])
E_THIRD_ORDER = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
F_THIRD_ORDER = np.array([[0.0], [1.0], [0.0]])

# A 2x4 com ℝ⁶ invariante
A_ORBIT = np.array([[1.0, 0.0, -1.0, 0.0], [0.0, -1.0, 0.0, 1.0]])

PD_GAIN = np.array([[10.0, 5.0]])           # K_p = 10, K_d = 5
POST_GAIN = np.array([[6.0, 6.0, 11.0]])    # polos em −1, −2, −3


def double_integrator_systems():
    return (LinSys(A_DOUBLE_INTEGRATOR, B_DOUBLE_INTEGRATOR),
            LinSys(E_THIRD_ORDER, F_THIRD_ORDER))


def double_integrator_scenario(**kwargs):
    """ℝ² → ℝ³ em [10, 11] com μ = 0.5, de (1, −1) até (1,1,2,2,1,1)"""
    sigma1, sigma2 = double_integrator_systems()
    return TransientScenario(
        sigma1=sigma1, sigma2=sigma2, t0=10.0, te=11.0,
        mu=MuSchedule.constant(0.5),
        x_t0=[1.0, -1.0],
        target=[1.0, 1.0, 2.0, 2.0, 1.0, 1.0],
        **kwargs,
    )


def double_integrator_phases(t_begin=0.0, t_end=25.0):
    """Pré-fase PD seguindo r(t) = (11 − t, −1) e pós-fase estabilizante"""
    sigma1, sigma2 = double_integrator_systems()
    pre = Phase(sigma1, PD_GAIN, t_begin, 10.0,
                reference=Reference(r0=[11.0 - t_begin, -1.0], rate=[-1.0, 0.0]),
                x0=[0.0, 0.0])
    post = Phase(sigma2, POST_GAIN, 11.0, t_end)
    return pre, post
