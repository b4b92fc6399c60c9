"""
Relatório de execução em texto: uma linha `chave: valor` por item
"""
import numpy as np

FLOAT_FORMAT = '.10g'


def format_value(value):
    """Números com 10 dígitos significativos; arrays como listas aninhadas"""
    if isinstance(value, (bool, np.bool_)):
        return 'sim' if value else 'não'
    if isinstance(value, (float, np.floating)):
        return format(float(value), FLOAT_FORMAT)
    if isinstance(value, np.ndarray):
        if value.ndim == 1:
            return '(' + ', '.join(format_value(v) for v in value) + ')'
        return '[' + '; '.join(' '.join(format_value(v) for v in row) for row in value) + ']'
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(format_value(v) for v in value) + ']'
    return str(value)


class Report:
    """Pares chave/valor na ordem de inserção"""

    def __init__(self, mode, name=''):
        self.items = []
        self.add('modo', mode)
        if name:
            self.add('cenario', name)

    def add(self, key, value):
        self.items.append((key, value))
        return self

    def get(self, key):
        for k, v in self.items:
            if k == key:
                return v
        raise KeyError(key)

    def render(self):
        return ''.join(f"{k}: {format_value(v)}\n" for k, v in self.items)

    def write(self, path):
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.render())


def format_errors(errors):
    """Lista de erros no formato das mensagens do parser"""
    lines = []
    for err in errors:
        where = []
        if err.get('campo'):
            where.append(f"campo '{err['campo']}'")
        if err.get('linha') not in (None, '-', -1):
            where.append(f"linha {err['linha']}, coluna {err.get('coluna', '-')}")
        place = f" ({'; '.join(where)})" if where else ''
        lines.append(f"[{err.get('tipo', 'Erro')}]{place}: {err['mensagem']}")
        if err.get('sugestao'):
            lines.append(f"  💡 {err['sugestao']}")
    return '\n'.join(lines)
