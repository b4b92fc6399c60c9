"""
Validador de arquivos de cenário (JSON)

Verifica a estrutura de cada modo antes de qualquer cálculo:
1. project
2. simulate
3. transient
4. phased
5. reduce
6. norm

Todos os erros são coletados (não apenas o primeiro), cada um com o
caminho do campo, mensagem e sugestão.
"""
import difflib
import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..config import DEFAULTS, MODES, SCHEMA_VERSION, Settings
from ..erros import CrossDimError, LiteralError, ScenarioError
from ..nucleo.stp import lcm
from ..projecao.sistema import LinSys, TimeKind
from ..quociente.quotient import has_member_in, reduce_vector
from ..sintatico.parser import parse_matrix
from ..transiente.phased import Phase, Reference
from ..transiente.transient import SUBSPACE, MuSchedule, TransientScenario

logger = logging.getLogger(__name__)

# Campos aceitos em qualquer modo
COMMON_FIELDS = {'schema_version', 'mode', 'name', 'description', 'output',
                 'dt', 'tol', 'eps', 'rank_tol', 'boundary_tol', 'max_steps', 'seed'}

MODE_FIELDS = {
    'project': {'dim', 'vector', 'system', 'C'},
    'simulate': {'A', 'x0', 'time_kind', 'steps', 't0', 'te'},
    'transient': {'sigma1', 'sigma2', 't0', 'te', 'mu', 'x_t0', 'target', 'shared_input'},
    'phased': {'sigma1', 'sigma2', 't0', 'te', 'mu', 'x_t0', 'target', 'shared_input',
               'pre', 'post'},
    'reduce': {'kind', 'value'},
    'norm': {'A', 'samples'},
}

SYSTEM_FIELDS = {'A', 'B', 'C', 'time_kind'}
MU_FIELDS = {'kind', 'value', 'm1', 'm2'}
PRE_FIELDS = {'gain', 't_start', 'x0', 'reference'}
POST_FIELDS = {'gain', 't_end', 'reference'}
REFERENCE_FIELDS = {'r0', 'rate'}
REDUCE_KINDS = ('vector', 'matrix', 'vecmat')


@dataclass(frozen=True, eq=False)
class ScenarioFile:
    """Cenário validado: configurações efetivas e objetos prontos para o modo"""

    schema_version: int
    mode: str
    name: str
    settings: Settings
    data: dict = field(default_factory=dict)
    output: str = None
    source: str = None


class ScenarioValidator:
    """
    Valida o dicionário lido de um arquivo de cenário.

    Os objetos numéricos (LinSys, TransientScenario, Phase) só são
    construídos quando a estrutura e as dimensões estão corretas.
    """

    def __init__(self, raw, overrides=None):
        self.raw = raw
        self.overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        self.errors = []
        self.data = {}
        self.settings = DEFAULTS

    # =========================================================================
    # REGISTRO DE ERROS
    # =========================================================================

    def _add_error(self, campo, mensagem, sugestao='', tipo='Erro de Cenário',
                   linha='-', coluna='-'):
        self.errors.append({
            'linha': linha,
            'coluna': coluna,
            'tipo': tipo,
            'campo': campo,
            'mensagem': mensagem,
            'sugestao': sugestao,
        })

    def _check_unknown(self, obj, allowed, path):
        for key in obj:
            if key not in allowed:
                close = difflib.get_close_matches(key, sorted(allowed), n=1)
                hint = f"Você quis dizer '{close[0]}'?" if close else \
                    f"Campos aceitos: {', '.join(sorted(allowed))}"
                self._add_error(self._join(path, key), f"Campo desconhecido '{key}'", hint)

    @staticmethod
    def _join(path, key):
        return f"{path}.{key}" if path else str(key)

    # =========================================================================
    # LEITURA DE VALORES
    # =========================================================================

    def _require(self, obj, key, path, sugestao=''):
        if key not in obj:
            self._add_error(self._join(path, key), f"Campo obrigatório '{key}' ausente", sugestao)
            return None
        return obj[key]

    def _object(self, obj, key, path, required=True):
        value = self._require(obj, key, path) if required else obj.get(key)
        if value is None:
            return None
        if not isinstance(value, dict):
            self._add_error(self._join(path, key), f"'{key}' deve ser um objeto JSON")
            return None
        return value

    def _number(self, value, campo, positive=False, nonnegative=False):
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            self._add_error(campo, f"Esperado número finito, recebido {value!r}")
            return None
        if positive and value <= 0:
            self._add_error(campo, f"Valor deve ser positivo, recebido {value}")
            return None
        if nonnegative and value < 0:
            self._add_error(campo, f"Valor não pode ser negativo, recebido {value}")
            return None
        return float(value)

    def _integer(self, value, campo, minimum=1):
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            self._add_error(campo, f"Esperado inteiro >= {minimum}, recebido {value!r}")
            return None
        return value

    def _matrix(self, value, campo, allow_flat=False):
        """
        Matriz como lista de linhas ou literal (string).

        REGRA: todas as linhas com o mesmo número de elementos.

        Exemplo correto:
            "A": [[0, 1], [0, 0]]
            "A": "[0 1; 0 0]"
        """
        if value is None:
            return None
        if isinstance(value, str):
            try:
                return parse_matrix(value)
            except LiteralError as exc:
                for err in exc.errors:
                    self._add_error(campo, err['mensagem'], err['sugestao'], tipo=err['tipo'],
                                    linha=err['linha'], coluna=err['coluna'])
                return None
        if not isinstance(value, list) or not value:
            self._add_error(campo, "Matriz deve ser lista de linhas não vazia ou literal",
                            "Ex.: [[1, 0], [0, 1]] ou \"[1 0; 0 1]\"")
            return None
        if all(not isinstance(v, list) for v in value):
            if not allow_flat:
                self._add_error(campo, "Esperada matriz (lista de linhas), recebida lista plana",
                                "Envolva cada linha em colchetes: [[...], [...]]")
                return None
            rows = [value]
        else:
            rows = value
        ok = True
        width = len(rows[0]) if isinstance(rows[0], list) else None
        for i, row in enumerate(rows):
            if not isinstance(row, list) or not row:
                self._add_error(f"{campo}[{i}]", "Linha deve ser uma lista não vazia de números")
                ok = False
                continue
            if width is not None and len(row) != width:
                self._add_error(f"{campo}[{i}]",
                                f"Matriz irregular: linha {i} tem {len(row)} elementos, "
                                f"linha 0 tem {len(rows[0])}",
                                "Todas as linhas precisam ter o mesmo tamanho")
                ok = False
            for j, v in enumerate(row):
                if self._number(v, f"{campo}[{i}][{j}]") is None:
                    ok = False
        if not ok:
            return None
        arr = np.array(rows, dtype=float)
        return arr.ravel() if rows is not value else arr

    def _vector(self, value, campo):
        """Vetor como lista de números, coluna [[..], [..]] ou literal"""
        arr = self._matrix(value, campo, allow_flat=True)
        if arr is None:
            return None
        if arr.ndim == 2:
            if 1 not in arr.shape:
                self._add_error(campo, f"Esperado vetor, recebida matriz {arr.shape[0]}x{arr.shape[1]}")
                return None
            arr = arr.ravel()
        return arr

    # =========================================================================
    # VALIDAÇÃO GERAL
    # =========================================================================

    def validate_all(self):
        """Valida o cenário inteiro; retorna a lista de erros"""
        self.errors = []
        self.data = {}
        raw = self.raw
        if not isinstance(raw, dict):
            self._add_error('', "O cenário deve ser um objeto JSON",
                            '{"schema_version": 1, "mode": "...", ...}')
            return self.errors

        version = self._require(raw, 'schema_version', '', f"Use \"schema_version\": {SCHEMA_VERSION}")
        if version is not None and version != SCHEMA_VERSION:
            self._add_error('schema_version', f"Versão de esquema {version!r} não suportada",
                            f"Versão suportada: {SCHEMA_VERSION}")

        mode = self._require(raw, 'mode', '', f"Modos: {', '.join(MODES)}")
        if mode is not None and mode not in MODES:
            close = difflib.get_close_matches(str(mode), MODES, n=1)
            self._add_error('mode', f"Modo desconhecido '{mode}'",
                            f"Você quis dizer '{close[0]}'?" if close else f"Modos: {', '.join(MODES)}")
            mode = None

        self._validate_settings(raw)
        if mode is None:
            return self.errors
        self._check_unknown(raw, COMMON_FIELDS | MODE_FIELDS[mode], '')

        getattr(self, f"_validate_{mode}")(raw)
        return self.errors

    def _validate_settings(self, raw):
        values = {}
        for key in ('dt', 'tol', 'eps', 'rank_tol', 'boundary_tol'):
            if key in raw:
                values[key] = self._number(raw[key], key, positive=key != 'eps', nonnegative=True)
        if 'max_steps' in raw:
            values['max_steps'] = self._integer(raw['max_steps'], 'max_steps')
        if 'seed' in raw:
            values['seed'] = self._integer(raw['seed'], 'seed', minimum=0)
        # flags da linha de comando têm precedência sobre o arquivo
        values.update(self.overrides)
        self.settings = DEFAULTS.override(**values)

    def _system(self, obj, path, require_input=False):
        """
        Bloco de sistema {A, B, C, time_kind}.

        REGRA: A quadrada; linhas de B e colunas de C iguais à ordem de A.
        """
        if obj is None:
            return None
        self._check_unknown(obj, SYSTEM_FIELDS, path)
        A = self._matrix(self._require(obj, 'A', path), self._join(path, 'A'))
        B = self._matrix(obj.get('B'), self._join(path, 'B'), allow_flat=True) if 'B' in obj else None
        C = self._matrix(obj.get('C'), self._join(path, 'C'), allow_flat=True) if 'C' in obj else None
        if require_input and 'B' not in obj:
            self._add_error(self._join(path, 'B'), "Matriz de entrada B obrigatória neste modo")
        kind = obj.get('time_kind', TimeKind.CONTINUOUS.value)
        if kind not in [k.value for k in TimeKind]:
            self._add_error(self._join(path, 'time_kind'), f"time_kind inválido '{kind}'",
                            "Use 'discrete' ou 'continuous'")
            return None
        if A is None:
            return None
        if A.shape[0] != A.shape[1]:
            self._add_error(self._join(path, 'A'), f"A deve ser quadrada, recebida {A.shape[0]}x{A.shape[1]}")
            return None
        n = A.shape[0]
        if B is not None:
            # lista plana vira coluna, como em LinSys
            B = B.reshape(-1, 1) if B.ndim == 1 else B
            if B.shape[0] != n:
                self._add_error(self._join(path, 'B'),
                                f"B tem {B.shape[0]} linhas, esperado {n} (ordem de A)")
                return None
        if C is not None:
            C = C.reshape(1, -1) if C.ndim == 1 else C
            if C.shape[1] != n:
                self._add_error(self._join(path, 'C'),
                                f"C tem {C.shape[1]} colunas, esperado {n} (ordem de A)")
                return None
        if ('B' in obj and B is None) or ('C' in obj and C is None):
            return None
        return LinSys(A, B, C, kind)

    # =========================================================================
    # 1. PROJECT
    # =========================================================================

    def _validate_project(self, raw):
        """
        REGRA: exatamente um de 'vector', 'system' ou 'C', mais 'dim'.

        Exemplo correto:
            {"mode": "project", "dim": 6, "system": {"A": [[0, 1], [0, 0]], "B": [0, 1]}}
        """
        dim = self._integer(self._require(raw, 'dim', ''), 'dim')
        given = [k for k in ('vector', 'system', 'C') if k in raw]
        if len(given) != 1:
            self._add_error('', f"Informe exatamente um de vector, system ou C (recebidos: {given or 'nenhum'})")
            return
        kind = given[0]
        if kind == 'vector':
            value = self._vector(raw['vector'], 'vector')
        elif kind == 'system':
            value = self._system(self._object(raw, 'system', ''), 'system')
        else:
            value = self._matrix(raw['C'], 'C', allow_flat=True)
            if value is not None and value.ndim == 1:
                value = value.reshape(1, -1)
        if dim is not None and value is not None:
            self.data = {'dim': dim, 'kind': kind, 'value': value}

    # =========================================================================
    # 2. SIMULATE
    # =========================================================================

    def _validate_simulate(self, raw):
        """
        REGRA: discreto exige 'steps'; contínuo exige 't0' < 'te'.
        A contínua não quadrada precisa que dim(x0) seja invariante.
        """
        A = self._matrix(self._require(raw, 'A', ''), 'A', allow_flat=True)
        if A is not None and A.ndim == 1:
            A = A.reshape(1, -1)
        x0 = self._vector(self._require(raw, 'x0', ''), 'x0')
        kind = raw.get('time_kind', TimeKind.DISCRETE.value)
        if kind not in [k.value for k in TimeKind]:
            self._add_error('time_kind', f"time_kind inválido '{kind}'", "Use 'discrete' ou 'continuous'")
            return
        if kind == TimeKind.DISCRETE.value:
            steps = self._integer(self._require(raw, 'steps', ''), 'steps', minimum=0)
            if all(v is not None for v in (A, x0, steps)):
                self.data = {'A': A, 'x0': x0, 'time_kind': TimeKind.DISCRETE, 'steps': steps}
            return
        t0 = self._number(self._require(raw, 't0', ''), 't0')
        te = self._number(self._require(raw, 'te', ''), 'te')
        if t0 is not None and te is not None and te < t0:
            self._add_error('te', f"te={te} anterior a t0={t0}")
            return
        if A is None or x0 is None or t0 is None or te is None:
            return
        m, n = A.shape
        if m == n and x0.size != n:
            self._add_error('x0', f"x0 tem dimensão {x0.size}, A tem ordem {n}")
            return
        if m != n and lcm(n, x0.size) * m // n != x0.size:
            self._add_error('x0', f"ℝ^{x0.size} não é invariante para A {m}x{n}; "
                                  "o fluxo contínuo precisa de dimensão invariante",
                            "Escolha x0 com dimensão d tal que (n ∨ d)·m/n = d")
            return
        self.data = {'A': A, 'x0': x0, 'time_kind': TimeKind.CONTINUOUS, 't0': t0, 'te': te}

    # =========================================================================
    # 3. TRANSIENT
    # =========================================================================

    def _mu(self, obj, t0, te):
        """
        μ: {"kind": "constant", "value": 0.5} | {"kind": "linear"} |
           {"kind": "masses", "m1": ..., "m2": ...}
        """
        if obj is None:
            return None
        self._check_unknown(obj, MU_FIELDS, 'mu')
        kind = self._require(obj, 'kind', 'mu', "Use 'constant', 'linear' ou 'masses'")
        try:
            if kind == 'constant':
                value = self._number(self._require(obj, 'value', 'mu'), 'mu.value')
                return None if value is None else MuSchedule.constant(value)
            if kind == 'linear':
                return None if t0 is None or te is None else MuSchedule.linear(t0, te)
            if kind == 'masses':
                m1 = self._number(self._require(obj, 'm1', 'mu'), 'mu.m1', positive=True)
                m2 = self._number(self._require(obj, 'm2', 'mu'), 'mu.m2', positive=True)
                return None if m1 is None or m2 is None else MuSchedule.constant_from_masses(m1, m2)
        except CrossDimError as exc:
            self._add_error('mu', str(exc))
            return None
        if kind is not None:
            self._add_error('mu.kind', f"Tipo de μ desconhecido '{kind}'",
                            "Use 'constant', 'linear' ou 'masses'")
        return None

    def _transient_scenario(self, raw):
        s1 = self._system(self._object(raw, 'sigma1', ''), 'sigma1', require_input=True)
        s2 = self._system(self._object(raw, 'sigma2', ''), 'sigma2', require_input=True)
        t0 = self._number(self._require(raw, 't0', ''), 't0')
        te = self._number(self._require(raw, 'te', ''), 'te')
        if t0 is not None and te is not None and te < t0:
            self._add_error('te', f"te={te} anterior a t0={t0}")
            te = None
        mu = self._mu(self._object(raw, 'mu', ''), t0, te)
        x_t0 = self._vector(self._require(raw, 'x_t0', ''), 'x_t0')
        shared = raw.get('shared_input', False)
        if not isinstance(shared, bool):
            self._add_error('shared_input', "shared_input deve ser true ou false")
            shared = None

        target = raw.get('target', SUBSPACE)
        if not (isinstance(target, str) and target == SUBSPACE):
            target = self._vector(target, 'target')

        if s1 is not None and x_t0 is not None and x_t0.size != s1.order:
            self._add_error('x_t0', f"x_t0 tem dimensão {x_t0.size}, sigma1 tem ordem {s1.order}")
            x_t0 = None
        if s1 is not None and s2 is not None and isinstance(target, np.ndarray):
            n = lcm(s1.order, s2.order)
            if target.size != n:
                self._add_error('target', f"target tem dimensão {target.size}, esperado n={n}",
                                "O alvo vive em ℝⁿ com n = mmc(ordem de sigma1, ordem de sigma2)")
                target = None
            elif not has_member_in(reduce_vector(target, self.settings.tol), s2.order):
                self._add_error('target', f"target não pertence a ℝ^{s2.order} ⊗ 𝟏_{n // s2.order}",
                                "Repita cada componente do estado final em blocos consecutivos")
                target = None
        if shared and s1 is not None and s2 is not None and s1.inputs != s2.inputs:
            self._add_error('shared_input',
                            f"entrada compartilhada exige o mesmo número de entradas "
                            f"({s1.inputs} != {s2.inputs})")
            shared = None

        if any(v is None for v in (s1, s2, t0, te, mu, x_t0, shared, target)):
            return None
        st = self.settings
        try:
            return TransientScenario(sigma1=s1, sigma2=s2, t0=t0, te=te, mu=mu, x_t0=x_t0,
                                     target=target, dt=st.dt, tol=st.tol, rank_tol=st.rank_tol,
                                     shared_input=shared)
        except CrossDimError as exc:
            self._add_error('', str(exc))
            return None

    def _validate_transient(self, raw):
        scenario = self._transient_scenario(raw)
        if scenario is not None:
            self.data = {'scenario': scenario}

    # =========================================================================
    # 4. PHASED
    # =========================================================================

    def _reference(self, obj, path, order):
        if obj is None:
            return None
        self._check_unknown(obj, REFERENCE_FIELDS, path)
        r0 = self._vector(self._require(obj, 'r0', path), self._join(path, 'r0'))
        rate = self._vector(obj['rate'], self._join(path, 'rate')) if 'rate' in obj else None
        if r0 is None or ('rate' in obj and rate is None):
            return False
        if order is not None and r0.size != order:
            self._add_error(self._join(path, 'r0'), f"r0 tem dimensão {r0.size}, esperado {order}")
            return False
        if rate is not None and rate.size != r0.size:
            self._add_error(self._join(path, 'rate'), f"rate tem dimensão {rate.size}, esperado {r0.size}")
            return False
        return Reference(r0, rate)

    def _phase(self, obj, path, system, fields, t_start, t_end):
        """
        Pré-fase {gain, t_start, x0, reference} ou pós-fase {gain, t_end, reference}.

        Exemplo correto:
            "pre": {"gain": [[10, 5]], "t_start": 0, "x0": [0, 0],
                    "reference": {"r0": [11, -1], "rate": [-1, 0]}}
        """
        if obj is None:
            return None
        self._check_unknown(obj, fields, path)
        K = self._matrix(self._require(obj, 'gain', path), self._join(path, 'gain'), allow_flat=True)
        if K is not None and K.ndim == 1:
            K = K.reshape(1, -1)
        if 't_start' in fields:
            t_start = self._number(self._require(obj, 't_start', path), self._join(path, 't_start'))
        else:
            t_end = self._number(self._require(obj, 't_end', path), self._join(path, 't_end'))
        x0 = self._vector(obj['x0'], self._join(path, 'x0')) if 'x0' in obj else None
        order = None if system is None else system.order
        reference = self._reference(obj.get('reference'), self._join(path, 'reference'), order)
        if any(v is None for v in (system, K, t_start, t_end)) or reference is False:
            return None
        if K.shape != (system.inputs, system.order):
            self._add_error(self._join(path, 'gain'),
                            f"ganho {K.shape[0]}x{K.shape[1]} incompatível; esperado "
                            f"{system.inputs}x{system.order}")
            return None
        if t_end < t_start:
            self._add_error(path, f"fase termina ({t_end}) antes de começar ({t_start})")
            return None
        if x0 is not None and x0.size != system.order:
            self._add_error(self._join(path, 'x0'), f"x0 tem dimensão {x0.size}, esperado {system.order}")
            return None
        return Phase(system, K, t_start, t_end, reference=reference, x0=x0)

    def _validate_phased(self, raw):
        """
        REGRA: a pré-fase termina em t0 (sistema sigma1) e a pós-fase
        começa em te (sistema sigma2).
        """
        scenario = self._transient_scenario(raw)
        pre_obj = self._object(raw, 'pre', '')
        post_obj = self._object(raw, 'post', '')
        t0 = raw.get('t0') if isinstance(raw.get('t0'), (int, float)) else None
        te = raw.get('te') if isinstance(raw.get('te'), (int, float)) else None
        s1 = scenario.sigma1 if scenario is not None else None
        s2 = scenario.sigma2 if scenario is not None else None
        pre = self._phase(pre_obj, 'pre', s1, PRE_FIELDS, None, t0)
        post = self._phase(post_obj, 'post', s2, POST_FIELDS, te, None)
        if all(v is not None for v in (scenario, pre, post)):
            self.data = {'scenario': scenario, 'pre': pre, 'post': post}

    # =========================================================================
    # 5. REDUCE
    # =========================================================================

    def _validate_reduce(self, raw):
        kind = self._require(raw, 'kind', '', f"Tipos: {', '.join(REDUCE_KINDS)}")
        if kind is not None and kind not in REDUCE_KINDS:
            self._add_error('kind', f"Tipo de redução desconhecido '{kind}'",
                            f"Tipos: {', '.join(REDUCE_KINDS)}")
            return
        value = self._require(raw, 'value', '')
        if kind is None or value is None:
            return
        if kind == 'vector':
            value = self._vector(value, 'value')
        else:
            value = self._matrix(value, 'value', allow_flat=True)
            if value is not None and value.ndim == 1:
                value = value.reshape(-1, 1) if kind == 'vecmat' else value.reshape(1, -1)
        if value is not None:
            self.data = {'kind': kind, 'value': value}

    # =========================================================================
    # 6. NORM
    # =========================================================================

    def _validate_norm(self, raw):
        A = self._matrix(self._require(raw, 'A', ''), 'A', allow_flat=True)
        samples = self._integer(raw.get('samples', 1000), 'samples', minimum=0)
        if A is not None and samples is not None:
            self.data = {'A': A if A.ndim == 2 else A.reshape(1, -1), 'samples': samples}

    def build(self, source=None):
        """ScenarioFile a partir de um cenário sem erros"""
        raw = self.raw
        return ScenarioFile(
            schema_version=raw['schema_version'], mode=raw['mode'],
            name=raw.get('name') or (source or raw['mode']),
            settings=self.settings, data=self.data, output=raw.get('output'),
            source=source)


def load_scenario_text(text, source=None, **overrides):
    """Valida o texto JSON de um cenário; levanta ScenarioError com todos os erros"""
    if not text.strip():
        raise ScenarioError([{
            'linha': 1, 'coluna': 1, 'tipo': 'Erro de Cenário', 'campo': '',
            'mensagem': "Arquivo de cenário vazio",
            'sugestao': '{"schema_version": 1, "mode": "...", ...}'}])
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError([{
            'linha': exc.lineno, 'coluna': exc.colno, 'tipo': 'Erro de Sintaxe JSON', 'campo': '',
            'mensagem': exc.msg, 'sugestao': "Verifique vírgulas, aspas e colchetes"}]) from exc
    validator = ScenarioValidator(raw, overrides)
    errors = validator.validate_all()
    if errors:
        logger.warning("cenário %s com %d erro(s)", source or '', len(errors))
        raise ScenarioError(errors)
    return validator.build(source)


def parse_scenario(path, **overrides):
    """Lê e valida um arquivo de cenário"""
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as exc:
        raise ScenarioError([{
            'linha': '-', 'coluna': '-', 'tipo': 'Erro de Arquivo', 'campo': '',
            'mensagem': f"Não foi possível ler {path}: {exc.strerror}",
            'sugestao': "Verifique o caminho do arquivo"}]) from exc
    return load_scenario_text(text, source=str(path), **overrides)
