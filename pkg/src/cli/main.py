"""
Interface de linha de comando do crossdim

    crossdim run <cenario.json> [--out DIR] [--dt X] [--tol X]
    crossdim check <cenario.json>
    crossdim reduce <literal> [--matrix | --vecmat] [--eps X]
    crossdim project <literal> --dim N [--kind vector|system|output] [--B LIT] [--C LIT]
    crossdim norm <literal> [--samples N] [--seed S]
    crossdim grammar
"""
import argparse
import logging
import sys

from ..config import DEFAULT_EPS, DEFAULTS, configure_logging
from ..erros import CrossDimError, InvalidValueError, ScenarioError
from ..projecao.sistema import LinSys
from ..semantico.scenario_validator import parse_scenario
from ..sintatico.grammar import MATRIX_GRAMMAR
from ..sintatico.parser import parse_matrix
from .relatorio import Report, format_errors
from .runner import (EXIT_NUMERIC, EXIT_OK, EXIT_VALIDATION, run, run_norm, run_project,
                     run_reduce)

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='crossdim',
        description='Álgebra de sistemas lineares entre dimensões e transientes de dimensão')
    parser.add_argument('--log-level', default=None,
                        help='nível de log (sobrepõe CROSSDIM_LOG)')
    sub = parser.add_subparsers(dest='command', required=True)

    p_run = sub.add_parser('run', help='executa um arquivo de cenário')
    p_run.add_argument('scenario', help='arquivo JSON do cenário')
    p_run.add_argument('--out', default=None, help='diretório dos artefatos')
    p_run.add_argument('--dt', type=float, default=None, help='passo de integração')
    p_run.add_argument('--tol', type=float, default=None, help='tolerância de realização')

    p_check = sub.add_parser('check', help='apenas valida um arquivo de cenário')
    p_check.add_argument('scenario', help='arquivo JSON do cenário')

    p_reduce = sub.add_parser('reduce', help='representante mínimo de uma classe')
    p_reduce.add_argument('literal', help="literal de matriz, ex.: '[1 1 2 2]'")
    group = p_reduce.add_mutually_exclusive_group()
    group.add_argument('--matrix', action='store_true', help='equivalência de matrizes (⊗ J_s)')
    group.add_argument('--vecmat', action='store_true', help='replicação de linhas (⊗ 𝟏_s)')
    p_reduce.add_argument('--eps', type=float, default=DEFAULT_EPS, help='tolerância da redução')

    p_project = sub.add_parser('project', help='projeção por mínimos quadrados')
    p_project.add_argument('literal', help='vetor, matriz A do sistema ou matriz C')
    p_project.add_argument('--dim', type=int, required=True, help='dimensão de destino')
    p_project.add_argument('--kind', choices=('vector', 'system', 'output'), default='vector')
    p_project.add_argument('--B', dest='b_literal', default=None, help='matriz B (kind=system)')
    p_project.add_argument('--C', dest='c_literal', default=None, help='matriz C (kind=system)')

    p_norm = sub.add_parser('norm', help='norma de operador em 𝒱')
    p_norm.add_argument('literal', help='matriz A')
    p_norm.add_argument('--samples', type=int, default=1000, help='amostras da estimativa')
    p_norm.add_argument('--seed', type=int, default=0)

    sub.add_parser('grammar', help='imprime a gramática dos literais de matriz')
    return parser


def _vector_from_literal(text):
    M = parse_matrix(text)
    if 1 not in M.shape:
        raise InvalidValueError(f"esperado vetor, recebida matriz {M.shape[0]}x{M.shape[1]}")
    return M.ravel()


def _cmd_check(args, out):
    sf = parse_scenario(args.scenario)
    print(f"cenário válido: modo {sf.mode}", file=out)
    return EXIT_OK


def _cmd_reduce(args, out):
    kind = 'matrix' if args.matrix else 'vecmat' if args.vecmat else 'vector'
    value = _vector_from_literal(args.literal) if kind == 'vector' else parse_matrix(args.literal)
    settings = DEFAULTS.override(eps=args.eps)
    outcome = run_reduce({'kind': kind, 'value': value}, settings, Report('reduce'))
    out.write(outcome.report.render())
    return outcome.exit_code


def _cmd_project(args, out):
    if args.dim < 1:
        raise InvalidValueError(f"--dim deve ser >= 1, recebido {args.dim}")
    if args.kind == 'vector':
        value = _vector_from_literal(args.literal)
    elif args.kind == 'system':
        B = parse_matrix(args.b_literal) if args.b_literal else None
        C = parse_matrix(args.c_literal) if args.c_literal else None
        value = LinSys(parse_matrix(args.literal), B, C)
    else:
        value = parse_matrix(args.literal)
    outcome = run_project({'dim': args.dim, 'kind': args.kind, 'value': value}, Report('project'))
    out.write(outcome.report.render())
    return outcome.exit_code


def _cmd_norm(args, out):
    settings = DEFAULTS.override(seed=args.seed)
    outcome = run_norm({'A': parse_matrix(args.literal), 'samples': max(args.samples, 0)},
                       settings, Report('norm'))
    out.write(outcome.report.render())
    return outcome.exit_code


def main(argv=None, stdout=None, stderr=None):
    """Ponto de entrada; devolve o código de saída"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level.upper() if args.log_level else None)

    if args.command == 'run':
        return run(args.scenario, out=args.out, dt=args.dt, tol=args.tol,
                   stdout=stdout, stderr=stderr)
    if args.command == 'grammar':
        stdout.write(MATRIX_GRAMMAR)
        return EXIT_OK

    handlers = {'check': _cmd_check, 'reduce': _cmd_reduce,
                'project': _cmd_project, 'norm': _cmd_norm}
    try:
        return handlers[args.command](args, stdout)
    except ScenarioError as exc:
        print(format_errors(exc.errors), file=stderr)
        return EXIT_VALIDATION
    except InvalidValueError as exc:
        print(f"erro de validação: {exc}", file=stderr)
        return EXIT_VALIDATION
    except CrossDimError as exc:
        logger.error("falha numérica: %s", exc)
        print(f"falha numérica: {exc}", file=stderr)
        return EXIT_NUMERIC


if __name__ == '__main__':
    sys.exit(main())
