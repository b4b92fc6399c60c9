"""
Sistema de controle linear (A, B, C) em espaço de dimensão fixa
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..erros import InvalidValueError
from ..nucleo.stp import as_mat


class TimeKind(str, Enum):
    """Tipo de tempo do sistema"""
    DISCRETE = 'discrete'
    CONTINUOUS = 'continuous'


@dataclass(frozen=True, eq=False)
class LinSys:
    """
    Sistema linear ẋ = Ax + Bu, y = Cx (ou x(t+1) = Ax + Bu).

    B e C são opcionais. As matrizes são validadas e convertidas na criação.
    """

    A: np.ndarray
    B: Optional[np.ndarray] = None
    C: Optional[np.ndarray] = None
    time_kind: TimeKind = TimeKind.CONTINUOUS

    def __post_init__(self):
        A = as_mat(self.A, 'A')
        if A.shape[0] != A.shape[1]:
            raise InvalidValueError(f"A deve ser quadrada, recebido {A.shape}")
        object.__setattr__(self, 'A', A)

        if self.B is not None:
            B = np.array(self.B, dtype=float)
            # vetor 1-D é tratado como coluna de entrada
            B = as_mat(B.reshape(-1, 1) if B.ndim == 1 else B, 'B')
            if B.shape[0] != A.shape[0]:
                raise InvalidValueError(
                    f"B tem {B.shape[0]} linhas, esperado {A.shape[0]} (ordem de A)")
            object.__setattr__(self, 'B', B)

        if self.C is not None:
            C = as_mat(self.C, 'C')
            if C.shape[1] != A.shape[0]:
                raise InvalidValueError(
                    f"C tem {C.shape[1]} colunas, esperado {A.shape[0]} (ordem de A)")
            object.__setattr__(self, 'C', C)

        object.__setattr__(self, 'time_kind', TimeKind(self.time_kind))

    @property
    def order(self):
        return self.A.shape[0]

    @property
    def inputs(self):
        return 0 if self.B is None else self.B.shape[1]

    def input_matrix(self):
        """B ou uma matriz n x 0 quando o sistema não tem entrada"""
        return self.B if self.B is not None else np.zeros((self.order, 0))
