"""
Configuração do crossdim
Valores padrão de tolerâncias, passos de integração e nível de log
"""
import logging
import os
from dataclasses import dataclass, replace

# Variável de ambiente para o nível de log
ENV_LOG = 'CROSSDIM_LOG'

# Versão do esquema dos arquivos de cenário
SCHEMA_VERSION = 1

# Modos aceitos pelos arquivos de cenário
MODES = ('project', 'simulate', 'transient', 'phased', 'reduce', 'norm')

# Valores padrão (a CLI e os arquivos de cenário podem sobrescrever)
DEFAULT_DT = 1e-3
DEFAULT_TOL = 1e-6
DEFAULT_EPS = 1e-9
DEFAULT_RANK_TOL = 1e-9
DEFAULT_BOUNDARY_TOL = 1e-6
DEFAULT_MAX_STEPS = 64

LOG_FORMAT = '%(asctime)s %(levelname)-8s %(name)s: %(message)s'


@dataclass(frozen=True)
class Settings:
    """Parâmetros numéricos de uma execução"""

    dt: float = DEFAULT_DT
    tol: float = DEFAULT_TOL
    eps: float = DEFAULT_EPS
    rank_tol: float = DEFAULT_RANK_TOL
    boundary_tol: float = DEFAULT_BOUNDARY_TOL
    max_steps: int = DEFAULT_MAX_STEPS
    seed: int = 0

    def override(self, **kwargs):
        """Retorna uma cópia trocando apenas os valores que não são None"""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **changes)


DEFAULTS = Settings()


def log_level_from_env(default='WARNING'):
    """Lê o nível de log de CROSSDIM_LOG (nome ou número)"""
    raw = os.environ.get(ENV_LOG, default).strip()
    if raw.isdigit():
        return int(raw)
    level = logging.getLevelName(raw.upper())
    # getLevelName devolve string quando o nome é desconhecido
    return level if isinstance(level, int) else logging.WARNING


def configure_logging(level=None):
    """Configura o handler raiz; usado apenas pela CLI"""
    if level is None:
        level = log_level_from_env()
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    return level
