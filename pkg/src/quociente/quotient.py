"""
Espaços quociente Ω = 𝒱/↔ e Ξ = ℳ/≈

Classes de equivalência guardadas pelo representante mínimo, aritmética
no quociente, ação de classes de matrizes, levantamento para ℝⁿ e
equivalência de sistemas.

A redução canônica usa igualdade exata por padrão; com eps > 0 um bloco
conta como constante quando o desvio em relação à média é <= eps, e o
maior desvio é registrado na classe.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..config import DEFAULT_EPS
from ..dinamica.dynamics import operator_vnorm
from ..erros import InvalidValueError, LiftError
from ..espaco.vspace import vadd, vdist, vnorm, vscale, vsub
from ..nucleo.stp import as_mat, as_vec, divisors, gcd, j_mat, kron, lcm, mv2, stp2
from ..projecao.sistema import LinSys, TimeKind

logger = logging.getLogger(__name__)


def _blocks_constant(blocks, axis, eps):
    """Verifica constância ao longo de `axis`; devolve (ok, valores, desvio)"""
    first = np.take(blocks, [0], axis=axis)
    if np.array_equal(blocks, np.broadcast_to(first, blocks.shape)):
        return True, np.squeeze(first, axis=axis), 0.0
    if eps == 0.0:
        return False, None, None
    mean = blocks.mean(axis=axis, keepdims=True)
    deviation = float(np.max(np.abs(blocks - mean)))
    if deviation <= eps:
        return True, np.squeeze(mean, axis=axis), deviation
    return False, None, None


def _same(a, b, eps):
    if a.shape != b.shape:
        return False
    if eps == 0.0:
        return bool(np.array_equal(a, b))
    return bool(np.max(np.abs(a - b)) <= eps)


# ============================================================================
# TIPOS
# ============================================================================

@dataclass(frozen=True, eq=False)
class _Class:
    rep: np.ndarray
    deviation: float = field(default=0.0)

    def __post_init__(self):
        rep = np.array(self.rep, dtype=float)
        rep.setflags(write=False)
        object.__setattr__(self, 'rep', rep)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return _same(self.rep, other.rep, 0.0)

    def __hash__(self):
        return hash((type(self).__name__, self.rep.shape, self.rep.tobytes()))

    def same_as(self, other, eps=DEFAULT_EPS):
        """Igualdade de representantes dentro da tolerância"""
        return _same(self.rep, other.rep, eps)


class VecClass(_Class):
    """Classe x̄ ∈ Ω guardada pelo menor vetor z"""

    @property
    def dim(self):
        return self.rep.size

    def __repr__(self):
        return f"VecClass({self.rep.tolist()})"


class MatClass(_Class):
    """Classe Â ∈ Ξ guardada pela menor Λ (A = Λ ⊗ J_s)"""

    @property
    def shape(self):
        return self.rep.shape

    def __repr__(self):
        return f"MatClass({self.rep.tolist()})"


class VecMatClass(_Class):
    """Classe B̄ por replicação de linhas (B = C ⊗ 𝟏_s)"""

    @property
    def shape(self):
        return self.rep.shape

    def __repr__(self):
        return f"VecMatClass({self.rep.tolist()})"


# ============================================================================
# REDUÇÃO CANÔNICA
# ============================================================================

def reduce_vector(x, eps=0.0):
    """Menor z com x = z ⊗ 𝟏_k (divisores de dim(x) em ordem crescente)"""
    x = as_vec(x, 'x')
    r = x.size
    for d in divisors(r):
        ok, rep, dev = _blocks_constant(x.reshape(d, r // d), 1, eps)
        if ok:
            if dev:
                logger.debug("redução com desvio %.3g (eps=%g)", dev, eps)
            return VecClass(rep, dev)
    # inalcançável: d = r sempre é aceito
    return VecClass(x)


def vec_equivalent(x, y, eps=DEFAULT_EPS):
    """x ↔ y"""
    return reduce_vector(x, eps).same_as(reduce_vector(y, eps), eps)


def reduce_matrix(A, eps=0.0):
    """Menor Λ com A = Λ ⊗ J_s; s percorre divisores de mdc(linhas, colunas) em ordem decrescente"""
    A = as_mat(A, 'A')
    rows, cols = A.shape
    for s in reversed(divisors(gcd(rows, cols))):
        p, q = rows // s, cols // s
        tiles = A.reshape(p, s, q, s).transpose(0, 2, 1, 3).reshape(p, q, s * s)
        ok, mean, dev = _blocks_constant(tiles, 2, eps)
        if ok:
            if dev:
                logger.debug("redução de matriz com desvio %.3g (eps=%g)", dev, eps)
            return MatClass(s * mean, dev)
    return MatClass(A)


def mat_equivalent(A, B, eps=DEFAULT_EPS):
    """A ≈ B"""
    return reduce_matrix(A, eps).same_as(reduce_matrix(B, eps), eps)


def reduce_vecmat(B, eps=0.0):
    """Menor C com B = C ⊗ 𝟏_s (blocos consecutivos de linhas iguais)"""
    B = as_mat(B, 'B')
    rows, cols = B.shape
    for d in divisors(rows):
        ok, rep, dev = _blocks_constant(B.reshape(d, rows // d, cols), 1, eps)
        if ok:
            return VecMatClass(rep.reshape(d, cols), dev)
    return VecMatClass(B)


def vecmat_equivalent(B, C, eps=DEFAULT_EPS):
    """B ↔ C para matrizes vistas como vetores de colunas"""
    return reduce_vecmat(B, eps).same_as(reduce_vecmat(C, eps), eps)


# ============================================================================
# ARITMÉTICA NO QUOCIENTE
# ============================================================================

def _vclass(x, eps=0.0):
    return x if isinstance(x, VecClass) else reduce_vector(x, eps)


def _mclass(A, eps=0.0):
    return A if isinstance(A, MatClass) else reduce_matrix(A, eps)


def class_add(xc, yc, eps=DEFAULT_EPS):
    """x̄ ⊞ ȳ"""
    return reduce_vector(vadd(_vclass(xc, eps).rep, _vclass(yc, eps).rep), eps)


def class_sub(xc, yc, eps=DEFAULT_EPS):
    """x̄ ⊟ ȳ"""
    return reduce_vector(vsub(_vclass(xc, eps).rep, _vclass(yc, eps).rep), eps)


def class_scale(a, xc, eps=DEFAULT_EPS):
    """a·x̄"""
    return reduce_vector(vscale(a, _vclass(xc, eps).rep), eps)


def class_norm(xc):
    """‖x̄‖_𝒱"""
    return vnorm(_vclass(xc).rep)


def class_dist(xc, yc):
    """d_𝒱(x̄, ȳ)"""
    return vdist(_vclass(xc).rep, _vclass(yc).rep)


def class_mul(Ac, Bc, eps=DEFAULT_EPS):
    """Â ∘ B̂"""
    return reduce_matrix(stp2(_mclass(Ac, eps).rep, _mclass(Bc, eps).rep), eps)


def class_action(Ac, xc, eps=DEFAULT_EPS):
    """Â ⧈ x̄"""
    return reduce_vector(mv2(_mclass(Ac, eps).rep, _vclass(xc, eps).rep), eps)


def class_opnorm(Ac):
    """‖Â‖_𝒱 calculada no representante"""
    return operator_vnorm(_mclass(Ac).rep)


# ============================================================================
# LEVANTAMENTO
# ============================================================================

def lift_vector(xc, n):
    """Membro de x̄ em ℝⁿ: z ⊗ 𝟏_{n/dim(z)}"""
    rep = _vclass(xc).rep
    d = rep.size
    if n < 1 or n % d:
        raise LiftError(f"x̄ não tem representante em ℝ^{n}; use múltiplos de {d}", d)
    return np.repeat(rep, n // d)


def lift_matrix(Ac, n):
    """Membro de Â com n linhas: Λ ⊗ J_{n/linhas(Λ)}"""
    rep = _mclass(Ac).rep
    d = rep.shape[0]
    if n < 1 or n % d:
        raise LiftError(f"Â não tem representante com {n} linhas; use múltiplos de {d}", d)
    return kron(rep, j_mat(n // d))


def lift_vecmat(Bc, n):
    """Membro de B̄ com n linhas: C ⊗ 𝟏_{n/linhas(C)}"""
    rep = Bc.rep if isinstance(Bc, VecMatClass) else reduce_vecmat(Bc).rep
    d = rep.shape[0]
    if n < 1 or n % d:
        raise LiftError(f"B̄ não tem representante com {n} linhas; use múltiplos de {d}", d)
    return np.repeat(rep, n // d, axis=0)


# ============================================================================
# SISTEMAS NO QUOCIENTE
# ============================================================================

@dataclass(frozen=True)
class QuotientSystem:
    """Sistema de projeção em Ω: (Â, B̄, Ĉ)"""

    A: MatClass
    B: Optional[VecMatClass] = None
    C: Optional[MatClass] = None
    time_kind: TimeKind = TimeKind.CONTINUOUS

    @property
    def lift_step(self):
        """Toda dimensão de levantamento é múltiplo deste valor"""
        sizes = [self.A.shape[0]]
        if self.B is not None:
            sizes.append(self.B.shape[0])
        if self.C is not None:
            sizes.append(self.C.shape[1])
        step = 1
        for s in sizes:
            step = lcm(step, s)
        return step


def system_class(sys, eps=0.0):
    """Sistema de projeção em Ω de um LinSys"""
    return QuotientSystem(
        A=reduce_matrix(sys.A, eps),
        B=None if sys.B is None else reduce_vecmat(sys.B, eps),
        C=None if sys.C is None else reduce_matrix(sys.C, eps),
        time_kind=sys.time_kind,
    )


def lift_system(qsys, n):
    """Sistema de levantamento em ℝⁿ de um sistema no quociente"""
    step = qsys.lift_step
    if n < 1 or n % step:
        raise LiftError(f"sistema sem levantamento em ℝ^{n}; use múltiplos de {step}", step)
    A = lift_matrix(qsys.A, n)
    B = None if qsys.B is None else lift_vecmat(qsys.B, n)
    C = None
    if qsys.C is not None:
        rep = qsys.C.rep
        C = kron(rep, j_mat(n // rep.shape[1]))
    return LinSys(A, B, C, qsys.time_kind)


def systems_equivalent(sys1, sys2, eps=DEFAULT_EPS):
    """(A, B, C) equivalente a (A', B', C') pelas formas canônicas"""
    if (sys1.B is None) != (sys2.B is None) or (sys1.C is None) != (sys2.C is None):
        return False
    q1, q2 = system_class(sys1, eps), system_class(sys2, eps)
    if not q1.A.same_as(q2.A, eps):
        return False
    if q1.B is not None and not q1.B.same_as(q2.B, eps):
        return False
    if q1.C is not None and not q1.C.same_as(q2.C, eps):
        return False
    return True


def has_member_in(xc, q):
    """dim(x̄) divide q, isto é, x̄ tem membro em ℝ^q"""
    if q < 1:
        raise InvalidValueError(f"q deve ser >= 1, recebido {q}")
    return q % _vclass(xc).dim == 0
