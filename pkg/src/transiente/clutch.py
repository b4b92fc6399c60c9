"""
Embreagem: eixos de entrada/saída desacoplados (ℝ²) e acoplados (ℝ¹)

Os torques τ_i, τ_o entram direto como controle; o atrito da embreagem
não é modelado.
"""
from ..erros import InvalidValueError
from ..projecao.projection import project_system
from ..projecao.sistema import LinSys
from .transient import MuSchedule, TransientScenario

# Parâmetros do exemplo de embreagem
J_IN = 0.2
J_OUT = 0.7753
D_IN = 0.03
D_OUT = 0.03
OMEGA_T0 = (150.0, 0.0)
OMEGA_TARGET = 25.0
WINDOW = (0.0, 0.86)


def _check(J_i, J_o, d_i, d_o):
    if J_i <= 0 or J_o <= 0:
        raise InvalidValueError(f"inércias devem ser positivas: J_i={J_i}, J_o={J_o}")
    if d_i < 0 or d_o < 0:
        raise InvalidValueError(f"amortecimentos não podem ser negativos: d_i={d_i}, d_o={d_o}")


def clutch_systems(J_i=J_IN, J_o=J_OUT, d_i=D_IN, d_o=D_OUT):
    """
    Modelos brutos.

    Σ₁ (desacoplado): J_i ω̇_i = −d_i ω_i + τ_i, J_o ω̇_o = −d_o ω_o − τ_o
    Σ₂ (acoplado):    (J_i + J_o) ω̇ = −(d_i + d_o) ω + τ_i − τ_o
    """
    _check(J_i, J_o, d_i, d_o)
    J = J_i + J_o
    sigma1 = LinSys(A=[[-d_i / J_i, 0.0], [0.0, -d_o / J_o]],
                    B=[[1.0 / J_i, 0.0], [0.0, -1.0 / J_o]])
    sigma2 = LinSys(A=[[-(d_i + d_o) / J]], B=[[1.0 / J, -1.0 / J]])
    return sigma1, sigma2


def clutch_models(J_i=J_IN, J_o=J_OUT, d_i=D_IN, d_o=D_OUT):
    """Par projetado em ℝ² (A^π₁, B^π₁) e (A^π₂, B^π₂)"""
    sigma1, sigma2 = clutch_systems(J_i, J_o, d_i, d_o)
    return project_system(sigma1, 2), project_system(sigma2, 2)


def clutch_scenario(J_i=J_IN, J_o=J_OUT, d_i=D_IN, d_o=D_OUT, omega_t0=OMEGA_T0,
                    omega_target=OMEGA_TARGET, window=WINDOW, **kwargs):
    """Acoplamento: (ω_i, ω_o) = omega_t0 até ω_i = ω_o = omega_target"""
    sigma1, sigma2 = clutch_systems(J_i, J_o, d_i, d_o)
    t0, te = window
    return TransientScenario(
        sigma1=sigma1, sigma2=sigma2, t0=t0, te=te,
        mu=MuSchedule.linear(t0, te),
        x_t0=list(omega_t0),
        target=[omega_target, omega_target],
        shared_input=True,
        **kwargs,
    )
