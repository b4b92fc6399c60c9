"""Testes da dinâmica entre dimensões e da integração RK4"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.dinamica.dynamics import (dimension_orbit, is_invariant_dim, operator_vnorm,
                                   operator_vnorm_sampled, restricted_matrix,
                                   simulate_continuous, simulate_discrete, time_grid)
from src.dinamica.trajectory import Trajectory, concat, read_csv, write_csv
from src.erros import InvalidValueError, NotInvariantError
from src.espaco.vspace import vdist, vnorm, vsub
from src.nucleo.stp import j_mat, kron, mv2

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)

sizes = st.integers(min_value=1, max_value=4)
seeds = st.integers(min_value=0, max_value=2**32 - 1)

# A_* impresso para a matriz 2x4 restrita a ℝ⁶
A_STAR = np.array([
    [2, 1, 0, -2, -1, 0],
    [2, 1, 0, -2, -1, 0],
    [2, 1, 0, -2, -1, 0],
    [0, -1, -2, 0, 1, 2],
    [0, -1, -2, 0, 1, 2],
    [0, -1, -2, 0, 1, 2],
]) / 3.0


class TestDinamicaDiscreta:

    def test_orbita_exemplo(self, orbit_matrix):
        orbit = dimension_orbit(orbit_matrix, 3)
        assert orbit.dims == [3, 6]
        assert orbit.closed
        assert (orbit.preperiod, orbit.period) == (1, 1)
        assert orbit.fixed_dim == 6

    def test_orbita_matriz_quadrada(self):
        orbit = dimension_orbit(np.eye(2), 2)
        assert orbit.dims == [2]
        assert orbit.fixed_dim == 2

    def test_orbita_aberta(self):
        orbit = dimension_orbit(np.ones((2, 1)), 1, max_steps=5)
        assert not orbit.closed
        assert orbit.dims == [1, 2, 4, 8, 16, 32]
        assert orbit.fixed_dim is None

    def test_restricted_matrix_exemplo(self, orbit_matrix):
        assert np.max(np.abs(restricted_matrix(orbit_matrix, 6) - A_STAR)) <= 1e-12

    def test_restricted_matrix_exige_invariancia(self, orbit_matrix):
        assert is_invariant_dim(orbit_matrix, 6)
        assert not is_invariant_dim(orbit_matrix, 3)
        with pytest.raises(NotInvariantError):
            restricted_matrix(orbit_matrix, 3)

    def test_restricted_matrix_concorda_com_mv2(self, orbit_matrix, rng):
        A_star = restricted_matrix(orbit_matrix, 6)
        for _ in range(50):
            x = rng.uniform(-1, 1, 6)
            assert np.max(np.abs(A_star @ x - mv2(orbit_matrix, x))) <= 1e-12

    def test_simulate_discrete_exemplo(self, orbit_matrix):
        traj = simulate_discrete(orbit_matrix, [1.0, 0.0, 1.0], 3)
        assert traj.dims == [3, 6, 6, 6]
        assert np.max(np.abs(traj.states[1] - 2.0 / 3.0)) <= 1e-12
        assert np.max(np.abs(traj.states[2])) <= 1e-12
        assert traj.labels == ('inicial', 'mv2', 'restrito', 'restrito')

    def test_simulate_discrete_quadrada(self):
        A = np.array([[0.5, 1.0], [0.0, 0.5]])
        traj = simulate_discrete(A, [1.0, 1.0], 2)
        np.testing.assert_allclose(traj.final, A @ A @ np.array([1.0, 1.0]))

    def test_estado_zero(self, orbit_matrix):
        traj = simulate_discrete(orbit_matrix, [0.0, 0.0, 0.0], 2)
        assert all(not np.any(s) for s in traj.states)


class TestNormaV:

    def test_identidade(self):
        assert operator_vnorm(np.eye(3)) == pytest.approx(1.0)

    def test_exemplo_diagonal(self):
        assert operator_vnorm(np.diag([3.0, 4.0])) == pytest.approx(4.0)

    def test_amostragem_reprodutivel(self, orbit_matrix):
        a = operator_vnorm_sampled(orbit_matrix, 300, 5)
        b = operator_vnorm_sampled(orbit_matrix, 300, 5)
        assert a == b

    @PROPERTY
    @given(m=sizes, n=sizes, seed=seeds)
    def test_norma_domina_quocientes_amostrados(self, m, n, seed):
        A = np.random.default_rng(seed).uniform(-1, 1, (m, n))
        assert operator_vnorm_sampled(A, 20, seed) <= operator_vnorm(A) + 1e-9

    @PROPERTY
    @given(m=sizes, n=sizes, k=sizes, seed=seeds)
    def test_norma_invariante_por_bloco_de_media(self, m, n, k, seed):
        A = np.random.default_rng(seed).uniform(-1, 1, (m, n))
        assert abs(operator_vnorm(kron(A, j_mat(k))) - operator_vnorm(A)) <= 1e-9

    @PROPERTY
    @given(m=sizes, n=sizes, r=sizes, seed=seeds)
    def test_continuidade(self, m, n, r, seed):
        rng = np.random.default_rng(seed)
        A = rng.uniform(-1, 1, (m, n))
        x, y = rng.uniform(-1, 1, r), rng.uniform(-1, 1, r)
        assert vnorm(vsub(mv2(A, x), mv2(A, y))) <= operator_vnorm(A) * vdist(x, y) + 1e-9

    def test_amostras_em_dimensao_propria_aproximam_a_norma(self, rng):
        A = rng.uniform(-1, 1, (2, 3))
        estimate = operator_vnorm_sampled(A, 5000, 11, dims=[3])
        assert estimate <= operator_vnorm(A) + 1e-9
        assert estimate >= 0.98 * operator_vnorm(A)


class TestIntegracao:

    def test_time_grid(self):
        grid = time_grid(0.0, 1.0, 0.25)
        np.testing.assert_allclose(grid, [0.0, 0.25, 0.5, 0.75, 1.0])
        assert time_grid(2.0, 2.0).tolist() == [2.0]
        with pytest.raises(InvalidValueError):
            time_grid(1.0, 0.0)
        with pytest.raises(InvalidValueError):
            time_grid(0.0, 1.0, 0.0)

    def test_duplo_integrador(self):
        traj = simulate_continuous([[0.0, 1.0], [0.0, 0.0]], [0.0, 1.0], 0.0, 1.0)
        np.testing.assert_allclose(traj.final, [1.0, 1.0], atol=1e-8)

    def test_decaimento_escalar(self):
        traj = simulate_continuous([[-1.0]], [1.0], 0.0, 1.0)
        assert traj.final[0] == pytest.approx(math.exp(-1.0), abs=1e-8)

    def test_a_nula_e_constante(self):
        traj = simulate_continuous(np.zeros((2, 2)), [3.0, -1.0], 0.0, 0.5)
        np.testing.assert_array_equal(traj.final, [3.0, -1.0])

    def test_entrada_constante(self):
        # ẋ = u = 1
        traj = simulate_continuous([[0.0]], [0.0], 0.0, 2.0, B=[[1.0]], u=lambda t: [1.0])
        assert traj.final[0] == pytest.approx(2.0, abs=1e-12)

    def test_rejeita_a_nao_quadrada(self, orbit_matrix):
        with pytest.raises(InvalidValueError):
            simulate_continuous(orbit_matrix, np.ones(6), 0.0, 1.0)

    def test_fluxo_restrito(self, orbit_matrix):
        A_star = restricted_matrix(orbit_matrix, 6)
        traj = simulate_continuous(A_star, np.full(6, 2.0 / 3.0), 0.0, 1.0)
        # A_* 𝟏 = 0
        np.testing.assert_allclose(traj.final, np.full(6, 2.0 / 3.0), atol=1e-12)

    def test_ordem_rk4(self):
        omega = 5.0
        A = np.array([[0.0, 1.0], [-omega**2, 0.0]])
        te = 2.0
        exact = np.array([math.cos(omega * te), -omega * math.sin(omega * te)])
        errors = []
        for dt in (1e-2, 5e-3, 2.5e-3):
            traj = simulate_continuous(A, [1.0, 0.0], 0.0, te, dt)
            errors.append(np.linalg.norm(traj.final - exact))
        orders = [math.log2(a / b) for a, b in zip(errors, errors[1:])]
        assert min(orders) >= 3.8


class TestTrajetoria:

    def test_validacao(self):
        with pytest.raises(InvalidValueError):
            Trajectory((0.0, 0.0), ([1.0], [2.0]))
        with pytest.raises(InvalidValueError):
            Trajectory((0.0,), ([1.0], [2.0]))
        with pytest.raises(InvalidValueError):
            Trajectory((0.0,), ([1.0],), ('a', 'b'))

    def test_concat_e_drop_first(self):
        a = Trajectory((0.0, 1.0), ([1.0], [2.0]), ('pre', 'pre'))
        b = Trajectory((1.0, 2.0), ([2.0, 2.0], [3.0, 3.0]), ('pos', 'pos'))
        joined = concat(a, b.drop_first())
        assert joined.dims == [1, 1, 2]
        assert joined.labels == ('pre', 'pre', 'pos')
        assert joined.max_dim == 2

    def test_csv_ida_e_volta(self, tmp_path, orbit_matrix):
        traj = simulate_discrete(orbit_matrix, [0.1, 0.2, 0.3], 2)
        path = tmp_path / 'trajectory.csv'
        write_csv(traj, path)
        lines = path.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 't,phase,dim,x1,x2,x3,x4,x5,x6'
        assert lines[1].startswith('0,inicial,3,')
        assert lines[1].endswith(',,,')
        back = read_csv(path)
        assert back.times == traj.times
        assert back.labels == traj.labels
        for a, b in zip(back.states, traj.states):
            np.testing.assert_array_equal(a, b)

    def test_csv_cabecalho_invalido(self, tmp_path):
        path = tmp_path / 'bad.csv'
        path.write_text('a,b,c\n', encoding='utf-8')
        with pytest.raises(InvalidValueError):
            read_csv(path)
