"""
Módulo de Análise Semântica
Valida arquivos de cenário e monta os objetos de cada modo
"""

from .scenario_validator import (ScenarioFile, ScenarioValidator, load_scenario_text,
                                 parse_scenario)

__all__ = ['ScenarioFile', 'ScenarioValidator', 'load_scenario_text', 'parse_scenario']
