"""Testes do espaço 𝒱"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.erros import InvalidValueError
from src.espaco.vspace import expand, path, vadd, vdist, vinner, vnorm, vscale, vsub
from src.quociente.quotient import reduce_vector

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)

dims = st.integers(min_value=1, max_value=6)
factors = st.integers(min_value=1, max_value=4)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestOperacoes:

    def test_vadd_dimensoes_diferentes(self):
        np.testing.assert_array_equal(vadd([1.0, 2.0], [1.0, 2.0, 3.0]),
                                      [2.0, 2.0, 3.0, 4.0, 5.0, 5.0])

    def test_vadd_com_vetor_de_uns(self):
        np.testing.assert_array_equal(vadd([1.0, 2.0], [1.0, 1.0, 1.0]),
                                      [2.0, 2.0, 2.0, 3.0, 3.0, 3.0])

    def test_vsub_de_si_mesmo_e_zero(self):
        assert vnorm(vsub([1.0, 2.0], [1.0, 1.0, 2.0, 2.0])) == 0.0

    def test_vscale(self):
        np.testing.assert_array_equal(vscale(2.0, [1.0, -1.0]), [2.0, -2.0])

    def test_norma_e_produto_interno(self):
        assert vnorm([3.0, 4.0]) == pytest.approx(np.sqrt(12.5))
        assert vinner([1.0], [1.0, 1.0]) == pytest.approx(1.0)

    def test_expand_exige_multiplo(self):
        np.testing.assert_array_equal(expand([1.0, 2.0], 4), [1.0, 1.0, 2.0, 2.0])
        with pytest.raises(InvalidValueError):
            expand([1.0, 2.0], 3)

    def test_path_extremos(self):
        x, y = np.array([1.0, 3.0]), np.array([2.0, 2.0, 2.0])
        assert vdist(path(x, y, 1.0), x) == pytest.approx(0.0, abs=1e-12)
        assert vdist(path(x, y, 0.0), y) == pytest.approx(0.0, abs=1e-12)

    def test_path_no_meio(self):
        np.testing.assert_array_equal(path([1.0, 2.0], [1.0, 1.0, 1.0], 0.5),
                                      [1.0, 1.0, 1.0, 1.5, 1.5, 1.5])

    def test_path_rejeita_lambda_fora_de_0_1(self):
        with pytest.raises(InvalidValueError):
            path([1.0], [2.0], 1.5)


class TestPropriedades:

    @PROPERTY
    @given(m=dims, n=dims, k=factors, l=factors, seed=seeds)
    def test_distancia_invariante_por_replicacao(self, m, n, k, l, seed):
        rng = np.random.default_rng(seed)
        x, y = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n)
        assert abs(vdist(np.repeat(x, k), np.repeat(y, l)) - vdist(x, y)) <= 1e-12

    @PROPERTY
    @given(m=dims, n=dims, seed=seeds)
    def test_cauchy_schwarz(self, m, n, seed):
        rng = np.random.default_rng(seed)
        x, y = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n)
        assert abs(vinner(x, y)) <= vnorm(x) * vnorm(y) + 1e-12

    @PROPERTY
    @given(m=dims, n=dims, r=dims, seed=seeds)
    def test_leis_de_pseudo_espaco(self, m, n, r, seed):
        rng = np.random.default_rng(seed)
        x, y, z = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n), rng.uniform(-1, 1, r)
        np.testing.assert_array_equal(reduce_vector(vadd(x, y)).rep,
                                      reduce_vector(vadd(y, x)).rep)
        left = reduce_vector(vadd(vadd(x, y), z), 1e-12).rep
        right = reduce_vector(vadd(x, vadd(y, z)), 1e-12).rep
        assert left.shape == right.shape
        assert np.max(np.abs(left - right)) <= 1e-12

    @PROPERTY
    @given(m=dims, n=dims, seed=seeds)
    def test_distancia_simetrica(self, m, n, seed):
        rng = np.random.default_rng(seed)
        x, y = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n)
        assert vdist(x, y) == pytest.approx(vdist(y, x), abs=1e-12)

    @PROPERTY
    @given(m=dims, n=dims, r=dims, seed=seeds)
    def test_desigualdade_triangular(self, m, n, r, seed):
        rng = np.random.default_rng(seed)
        x, y, z = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n), rng.uniform(-1, 1, r)
        assert vdist(x, z) <= vdist(x, y) + vdist(y, z) + 1e-12

    @PROPERTY
    @given(m=dims, n=dims, seed=seeds,
           lam=st.floats(min_value=0.0, max_value=1.0),
           lam0=st.floats(min_value=0.0, max_value=1.0))
    def test_path_lipschitz(self, m, n, seed, lam, lam0):
        rng = np.random.default_rng(seed)
        x, y = rng.uniform(-1, 1, m), rng.uniform(-1, 1, n)
        bound = abs(lam - lam0) * (vnorm(x) + vnorm(y))
        assert vdist(path(x, y, lam), path(x, y, lam0)) <= bound + 1e-12
