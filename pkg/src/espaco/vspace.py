"""
Espaço de estados livre de dimensão 𝒱 = ∪ℝⁿ

V-adição/subtração, produto interno, norma, distância e o caminho
entre vetores de dimensões diferentes. Os resultados ficam na dimensão
t = m ∨ n (sem redução canônica; ver quociente).
"""
import numpy as np

from ..erros import InvalidValueError
from ..nucleo.stp import as_vec, lcm


def expand(x, t):
    """x ⊗ 𝟏_{t/dim(x)}"""
    x = as_vec(x, 'x')
    if t % x.size:
        raise InvalidValueError(f"{t} não é múltiplo de dim(x)={x.size}")
    return np.repeat(x, t // x.size)


def _common(x, y):
    x, y = as_vec(x, 'x'), as_vec(y, 'y')
    t = lcm(x.size, y.size)
    return expand(x, t), expand(y, t), t


def vadd(x, y):
    """V-adição x ⊞ y na dimensão t = m ∨ n"""
    xe, ye, _ = _common(x, y)
    return xe + ye


def vsub(x, y):
    """V-subtração x ⊟ y = x ⊞ (−y)"""
    xe, ye, _ = _common(x, y)
    return xe - ye


def vscale(a, x):
    """Multiplicação por escalar (mantém a dimensão)"""
    return float(a) * as_vec(x, 'x')


def vinner(x, y):
    """Produto interno ⟨x, y⟩_𝒱 = (1/t)·⟨x ⊗ 𝟏, y ⊗ 𝟏⟩"""
    xe, ye, t = _common(x, y)
    return float(xe @ ye) / t


def vnorm(x):
    """‖x‖_𝒱 = √(1/r)·‖x‖"""
    x = as_vec(x, 'x')
    return float(np.linalg.norm(x)) / np.sqrt(x.size)


def vdist(x, y):
    """d_𝒱(x, y) = ‖x ⊟ y‖_𝒱"""
    return vnorm(vsub(x, y))


def path(x, y, lam):
    """Caminho π(λ) = λx ⊞ (1−λ)y, com λ em [0, 1]"""
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise InvalidValueError(f"λ deve estar em [0, 1], recebido {lam}")
    return vadd(vscale(lam, x), vscale(1.0 - lam, y))
