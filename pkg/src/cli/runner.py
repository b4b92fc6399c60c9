"""
Execução de cenários: despacho por modo, relatório e trajetória em CSV

Códigos de saída: 0 sucesso, 2 erro de validação, 3 falha numérica
(inclui transiente não realizado).
"""
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..dinamica.dynamics import (dimension_orbit, operator_vnorm, operator_vnorm_sampled,
                                 restricted_matrix, simulate_continuous, simulate_discrete)
from ..dinamica.trajectory import Trajectory, write_csv
from ..erros import CrossDimError, InvalidValueError, ScenarioError
from ..espaco.vspace import vdist
from ..nucleo.stp import spectral_norm
from ..projecao.projection import project_output, project_system, project_vector
from ..projecao.sistema import TimeKind
from ..quociente.quotient import reduce_matrix, reduce_vecmat, reduce_vector
from ..semantico.scenario_validator import parse_scenario
from ..transiente.phased import run_phased
from ..transiente.transient import build_blend, is_controllable, realize_transience
from .relatorio import Report, format_errors

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

TRAJECTORY_FILE = 'trajectory.csv'
REPORT_FILE = 'report.txt'


@dataclass
class RunOutcome:
    exit_code: int
    report: Report
    trajectory: Optional[Trajectory] = None


# ============================================================================
# MODOS
# ============================================================================

def run_project(data, report):
    dim, kind, value = data['dim'], data['kind'], data['value']
    report.add('tipo', kind).add('dimensao_destino', dim)
    if kind == 'vector':
        projected = project_vector(value, dim)
        report.add('dimensao_origem', value.size)
        report.add('projecao', projected)
        report.add('distancia', vdist(value, projected))
    elif kind == 'system':
        sys_pi = project_system(value, dim)
        report.add('dimensao_origem', value.order)
        report.add('A_pi', sys_pi.A)
        if sys_pi.B is not None:
            report.add('B_pi', sys_pi.B)
        if sys_pi.C is not None:
            report.add('C_pi', sys_pi.C)
    else:
        report.add('dimensao_origem', value.shape[1])
        report.add('C_pi', project_output(value, dim))
    return RunOutcome(EXIT_OK, report)


def run_simulate(data, settings, report):
    A, x0 = data['A'], data['x0']
    if data['time_kind'] is TimeKind.DISCRETE:
        traj = simulate_discrete(A, x0, data['steps'], settings.max_steps)
        orbit = dimension_orbit(A, x0.size, settings.max_steps)
        report.add('tempo', 'discreto').add('passos', data['steps'])
        report.add('orbita_dimensoes', orbit.dims)
        report.add('orbita_fechada', orbit.closed)
        if orbit.closed:
            report.add('pre_periodo', orbit.preperiod).add('periodo', orbit.period)
        if orbit.fixed_dim is not None:
            report.add('dimensao_invariante', orbit.fixed_dim)
    else:
        A_sq = A if A.shape[0] == A.shape[1] else restricted_matrix(A, x0.size)
        traj = simulate_continuous(A_sq, x0, data['t0'], data['te'], settings.dt, label='continuo')
        report.add('tempo', 'continuo').add('dt', settings.dt)
        report.add('dimensao', x0.size)
    report.add('entradas', len(traj))
    report.add('estado_final', traj.final)
    report.add('dimensao_final', traj.final.size)
    return RunOutcome(EXIT_OK, report, traj)


def _transience_report(report, scenario, result):
    blend = build_blend(scenario)
    ctrl = is_controllable(blend.A(scenario.t0), blend.B(scenario.t0), scenario.rank_tol)
    report.add('p', scenario.p).add('q', scenario.q).add('n', scenario.n)
    report.add('janela', [scenario.t0, scenario.te])
    report.add('mu', scenario.mu.kind.value)
    report.add('posto_kalman_t0', ctrl.rank)
    if result.design is not None:
        report.add('posto_gramiano', result.design.gramian_rank)
        report.add('residuo_previsto', result.design.residual)
        report.add('energia', result.design.energy)
    report.add('z_t0', scenario.z0)
    report.add('z_alvo', result.z_target)
    report.add('z_te', result.z_te)
    report.add('distancia_alvo', result.distance)
    report.add('dimensao_reduzida', result.reduced.dim)
    report.add('y_te', result.y_te)
    report.add('veredito', 'realizado' if result.realized else 'não realizado')
    if result.reason:
        report.add('motivo', result.reason)


def run_transient(data, report):
    scenario = data['scenario']
    result = realize_transience(scenario)
    _transience_report(report, scenario, result)
    code = EXIT_OK if result.realized else EXIT_NUMERIC
    return RunOutcome(code, report, result.trajectory)


def run_phased_mode(data, settings, report):
    phased = run_phased(data['pre'], data['scenario'], data['post'], settings.boundary_tol)
    result = phased.transience
    if phased.pre is not None:
        report.add('x_pre_fim', phased.pre.final)
        report.add('desvio_fronteira', phased.boundary_mismatch)
    _transience_report(report, data['scenario'], result)
    if phased.post is not None:
        report.add('x_pos_fim', phased.post.final)
    report.add('entradas', len(phased.trajectory))
    code = EXIT_OK if result.realized else EXIT_NUMERIC
    return RunOutcome(code, report, phased.trajectory)


def run_reduce(data, settings, report):
    kind, value = data['kind'], data['value']
    if kind == 'vector':
        cls = reduce_vector(value, settings.eps)
        factor = value.size // cls.dim
    elif kind == 'matrix':
        cls = reduce_matrix(value, settings.eps)
        factor = value.shape[0] // cls.shape[0]
    else:
        cls = reduce_vecmat(value, settings.eps)
        factor = value.shape[0] // cls.shape[0]
    report.add('tipo', kind)
    report.add('representante', cls.rep)
    report.add('fator', factor)
    report.add('desvio', cls.deviation)
    return RunOutcome(EXIT_OK, report)


def run_norm(data, settings, report):
    A = data['A']
    report.add('forma', f"{A.shape[0]}x{A.shape[1]}")
    report.add('norma_espectral', spectral_norm(A))
    report.add('norma_v', operator_vnorm(A))
    if data['samples']:
        rng = np.random.default_rng(settings.seed)
        report.add('estimativa_amostrada', operator_vnorm_sampled(A, data['samples'], rng))
        report.add('amostras', data['samples'])
    return RunOutcome(EXIT_OK, report)


def run_scenario(sf):
    """Executa um ScenarioFile já validado"""
    logger.info("executando cenário %s (modo %s)", sf.name, sf.mode)
    report = Report(sf.mode, sf.name)
    data, settings = sf.data, sf.settings
    if sf.mode == 'project':
        return run_project(data, report)
    if sf.mode == 'simulate':
        return run_simulate(data, settings, report)
    if sf.mode == 'transient':
        return run_transient(data, report)
    if sf.mode == 'phased':
        return run_phased_mode(data, settings, report)
    if sf.mode == 'reduce':
        return run_reduce(data, settings, report)
    return run_norm(data, settings, report)


# ============================================================================
# ARQUIVOS
# ============================================================================

def output_dir(sf, out=None):
    if out:
        return Path(out)
    if sf.output:
        return Path(sf.output)
    stem = Path(sf.source).stem if sf.source else sf.mode
    return Path('crossdim-out') / stem


def write_artifacts(outcome, directory):
    directory.mkdir(parents=True, exist_ok=True)
    outcome.report.write(directory / REPORT_FILE)
    if outcome.trajectory is not None:
        write_csv(outcome.trajectory, directory / TRAJECTORY_FILE)
    logger.info("artefatos gravados em %s", directory)


def run(path, out=None, dt=None, tol=None, stdout=None, stderr=None):
    """`crossdim run`: valida, executa, grava artefatos e devolve o código de saída"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        sf = parse_scenario(path, dt=dt, tol=tol)
    except ScenarioError as exc:
        print(format_errors(exc.errors), file=stderr)
        return EXIT_VALIDATION

    try:
        outcome = run_scenario(sf)
    except InvalidValueError as exc:
        logger.error("cenário inválido: %s", exc)
        print(f"erro de validação: {exc}", file=stderr)
        return EXIT_VALIDATION
    except CrossDimError as exc:
        logger.error("falha numérica: %s", exc)
        print(f"falha numérica: {exc}", file=stderr)
        return EXIT_NUMERIC

    directory = output_dir(sf, out)
    write_artifacts(outcome, directory)
    stdout.write(outcome.report.render())
    return outcome.exit_code
