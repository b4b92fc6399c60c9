"""
Interface de linha de comando
"""
from .main import build_parser, main
from .relatorio import Report, format_errors, format_value
from .runner import EXIT_NUMERIC, EXIT_OK, EXIT_VALIDATION, RunOutcome, run, run_scenario

__all__ = [
    'build_parser', 'main', 'Report', 'format_errors', 'format_value',
    'EXIT_OK', 'EXIT_VALIDATION', 'EXIT_NUMERIC', 'RunOutcome', 'run', 'run_scenario',
]
