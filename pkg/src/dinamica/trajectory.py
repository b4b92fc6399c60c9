"""
Trajetórias com dimensão variável e sua gravação em CSV
"""
import csv
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..erros import InvalidValueError

# 17 dígitos significativos: leitura recupera o float exato
FLOAT_FORMAT = '.17g'


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Sequência (tempo, estado) onde cada estado pode ter dimensão própria.

    Os rótulos de fase são opcionais (um por entrada).
    """

    times: Tuple[float, ...]
    states: Tuple[np.ndarray, ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        states = tuple(np.array(s, dtype=float).ravel() for s in self.states)
        if not states:
            raise InvalidValueError("trajetória sem estados")
        if len(times) != len(states):
            raise InvalidValueError(
                f"{len(times)} tempos para {len(states)} estados")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise InvalidValueError("tempos devem ser estritamente crescentes")
        labels = self.labels
        if labels is not None:
            labels = tuple(str(lab) for lab in labels)
            if len(labels) != len(states):
                raise InvalidValueError(
                    f"{len(labels)} rótulos para {len(states)} estados")
        for s in states:
            s.setflags(write=False)
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'labels', labels)

    def __len__(self):
        return len(self.states)

    @property
    def dims(self):
        return [s.size for s in self.states]

    @property
    def final(self):
        return self.states[-1]

    @property
    def max_dim(self):
        return max(self.dims)

    def drop_first(self):
        """Cópia sem a primeira entrada (usado ao costurar fases)"""
        labels = None if self.labels is None else self.labels[1:]
        return Trajectory(self.times[1:], self.states[1:], labels)


def concat(*parts):
    """Concatena trajetórias; todas precisam de rótulos ou nenhuma"""
    parts = [p for p in parts if p is not None and len(p)]
    times, states, labels = [], [], []
    labelled = all(p.labels is not None for p in parts)
    for p in parts:
        times.extend(p.times)
        states.extend(p.states)
        if labelled:
            labels.extend(p.labels)
    return Trajectory(tuple(times), tuple(states), tuple(labels) if labelled else None)


# ============================================================================
# CSV
# ============================================================================

def csv_header(max_dim):
    return ['t', 'phase', 'dim'] + [f"x{i + 1}" for i in range(max_dim)]


def write_csv(traj, path):
    """
    Grava a trajetória como CSV: t,phase,dim,x1..xD.

    D é a maior dimensão da trajetória; colunas sobrando ficam vazias.
    """
    width = traj.max_dim
    labels = traj.labels or ('',) * len(traj)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        w = csv.writer(f, lineterminator='\n')
        w.writerow(csv_header(width))
        for t, label, state in zip(traj.times, labels, traj.states):
            values = [format(v, FLOAT_FORMAT) for v in state]
            values += [''] * (width - state.size)
            w.writerow([format(t, FLOAT_FORMAT), label, state.size] + values)


def read_csv(path):
    """Lê um CSV gravado por write_csv"""
    times, labels, states = [], [], []
    with open(path, newline='', encoding='utf-8') as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if not header or header[:3] != ['t', 'phase', 'dim']:
            raise InvalidValueError(f"cabeçalho inválido em {path}")
        for row in reader:
            dim = int(row[2])
            times.append(float(row[0]))
            labels.append(row[1])
            states.append(np.array([float(v) for v in row[3:3 + dim]]))
    has_labels = any(labels)
    return Trajectory(tuple(times), tuple(states), tuple(labels) if has_labels else None)
