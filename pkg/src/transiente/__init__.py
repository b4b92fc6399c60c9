"""
Transiente de dimensão: mistura, controle de mínima energia e execução em fases
"""
from .transient import (SUBSPACE, Blend, ControlDesign, Controllability, GramianResult,
                        MuKind, MuSchedule, TransienceResult, TransientScenario, build_blend,
                        gramian, is_controllable, ltv_gramian, min_energy_control,
                        numerical_rank, realize_transience, subspace_target,
                        with_initial_state)
from .phased import Phase, PhasedResult, Reference, run_phased, simulate_phase
from .clutch import clutch_models, clutch_scenario, clutch_systems
from .exemplos import double_integrator_phases, double_integrator_scenario, double_integrator_systems

__all__ = [
    'SUBSPACE', 'Blend', 'ControlDesign', 'Controllability', 'GramianResult', 'MuKind',
    'MuSchedule', 'TransienceResult', 'TransientScenario', 'build_blend', 'gramian',
    'is_controllable', 'ltv_gramian', 'min_energy_control', 'numerical_rank',
    'realize_transience', 'subspace_target', 'with_initial_state',
    'Phase', 'PhasedResult', 'Reference', 'run_phased', 'simulate_phase',
    'clutch_models', 'clutch_scenario', 'clutch_systems',
    'double_integrator_phases', 'double_integrator_scenario', 'double_integrator_systems',
]
