"""Fixtures compartilhadas pelos testes"""
from pathlib import Path

import numpy as np
import pytest

from src.transiente.exemplos import A_ORBIT, double_integrator_systems

SCENARIOS = Path(__file__).resolve().parent.parent / 'scenarios'


@pytest.fixture
def rng():
    """Gerador com semente fixa"""
    return np.random.default_rng(20240601)


@pytest.fixture
def orbit_matrix():
    return A_ORBIT.copy()


@pytest.fixture
def integrator_systems():
    return double_integrator_systems()


@pytest.fixture
def scenarios_dir():
    return SCENARIOS
