"""Testes do transiente de dimensão, da execução em fases e da embreagem"""
import numpy as np
import pytest
import scipy.linalg

from src.erros import InvalidValueError, PhaseBoundaryError
from src.projecao.sistema import LinSys
from src.transiente.clutch import OMEGA_TARGET, clutch_models, clutch_scenario, clutch_systems
from src.transiente.exemplos import (PD_GAIN, POST_GAIN, double_integrator_phases,
                                     double_integrator_scenario)
from src.transiente.phased import Phase, Reference, run_phased, simulate_phase
from src.transiente.transient import (SUBSPACE, MuKind, MuSchedule, TransientScenario,
                                      build_blend, gramian, is_controllable, ltv_gramian,
                                      min_energy_control, numerical_rank, realize_transience,
                                      subspace_target, with_initial_state)


class TestAgendaMu:

    def test_constante(self):
        mu = MuSchedule.constant(0.5)
        assert mu.kind is MuKind.CONSTANT
        assert mu(10.0) == 0.5

    def test_linear_decresce_e_satura(self):
        mu = MuSchedule.linear(0.0, 2.0)
        assert mu(0.0) == 1.0
        assert mu(1.0) == pytest.approx(0.5)
        assert mu(2.0) == 0.0
        assert mu(5.0) == 0.0
        assert mu(-1.0) == 1.0

    def test_massas(self):
        assert MuSchedule.constant_from_masses(1.0, 3.0)(0.0) == pytest.approx(0.25)

    def test_massas_complementares(self):
        for m1, m2 in [(1.0, 3.0), (0.2, 0.7753), (5.0, 5.0), (1e-3, 1e3)]:
            forward = MuSchedule.constant_from_masses(m1, m2)(0.0)
            backward = MuSchedule.constant_from_masses(m2, m1)(0.0)
            assert forward + backward == pytest.approx(1.0, abs=1e-15)
        assert MuSchedule.constant_from_masses(2.5, 2.5)(0.0) == 0.5

    @pytest.mark.parametrize('value', [0.0, 1.0, -0.2, 1.5])
    def test_constante_fora_de_0_1(self, value):
        with pytest.raises(InvalidValueError):
            MuSchedule.constant(value)

    def test_linear_exige_janela(self):
        with pytest.raises(InvalidValueError):
            MuSchedule.linear(1.0, 1.0)
        with pytest.raises(InvalidValueError):
            MuSchedule.constant_from_masses(0.0, 1.0)


class TestCenario:

    def test_dimensoes(self):
        scenario = double_integrator_scenario()
        assert (scenario.p, scenario.q, scenario.n) == (2, 3, 6)
        np.testing.assert_array_equal(scenario.z0, [1, 1, 1, -1, -1, -1])
        assert scenario.subspace_basis.shape == (6, 3)

    def test_alvo_fora_do_subespaco(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        with pytest.raises(InvalidValueError):
            TransientScenario(sigma1, sigma2, 0.0, 1.0, MuSchedule.constant(0.5), [1.0, 0.0],
                              target=[1, 2, 3, 4, 5, 6])

    def test_alvo_com_dimensao_errada(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        with pytest.raises(InvalidValueError):
            TransientScenario(sigma1, sigma2, 0.0, 1.0, MuSchedule.constant(0.5), [1.0, 0.0],
                              target=[1, 2, 1])

    def test_janela_invertida(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        with pytest.raises(InvalidValueError):
            TransientScenario(sigma1, sigma2, 2.0, 1.0, MuSchedule.constant(0.5), [1.0, 0.0])

    def test_x_t0_com_dimensao_errada(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        with pytest.raises(InvalidValueError):
            TransientScenario(sigma1, sigma2, 0.0, 1.0, MuSchedule.constant(0.5), [1.0, 0.0, 0.0])

    def test_entrada_compartilhada_exige_mesmo_numero_de_entradas(self):
        sigma1, sigma2 = clutch_systems()
        with pytest.raises(InvalidValueError):
            TransientScenario(sigma1, LinSys([[0.0]], [[1.0]]), 0.0, 1.0,
                              MuSchedule.constant(0.5), [1.0, 0.0], shared_input=True)

    def test_with_initial_state(self):
        scenario = with_initial_state(double_integrator_scenario(), [2.0, 0.0])
        np.testing.assert_array_equal(scenario.z0, [2, 2, 2, 0, 0, 0])
        assert scenario.te == 11.0


class TestMistura:
    """Duplo integrador → terceira ordem com μ = 0.5"""

    def test_a_estrela(self):
        blend = build_blend(double_integrator_scenario())
        expected = np.zeros((6, 6))
        expected[0:3, 3:6] = 1.0 / 6.0
        expected[0:2, 4:6] = 5.0 / 12.0
        expected[4:6, 2:4] = 1.0 / 4.0
        assert np.max(np.abs(blend.A(10.5) - expected)) <= 1e-12

    def test_b_estrela(self):
        blend = build_blend(double_integrator_scenario())
        A, B1, B2 = blend.at(10.0)
        assert np.max(np.abs(B1.ravel() - [0, 0, 0, 0.5, 0.5, 0.5])) <= 1e-12
        assert np.max(np.abs(B2.ravel() - [0, 0, 0.5, 0.5, 0, 0])) <= 1e-12
        assert blend.B(10.0).shape == (6, 2)
        assert blend.order == 6

    def test_entrada_compartilhada_soma(self):
        blend = build_blend(clutch_scenario())
        t = 0.3
        np.testing.assert_allclose(blend.B(t), blend.B1_star(t) + blend.B2_star(t))
        assert blend.B(t).shape == (2, 2)

    def test_mu_linear_nas_bordas(self):
        scenario = clutch_scenario()
        blend = build_blend(scenario)
        t0, te = scenario.t0, scenario.te
        np.testing.assert_array_equal(blend.A(t0), blend.A1)
        np.testing.assert_array_equal(blend.A(te), blend.A2)
        assert not np.any(blend.B2_star(t0))
        assert not np.any(blend.B1_star(te))
        np.testing.assert_array_equal(blend.B1_star(t0), blend.B1)
        np.testing.assert_array_equal(blend.B2_star(te), blend.B2)

    def test_posto_de_kalman(self):
        blend = build_blend(double_integrator_scenario())
        result = is_controllable(blend.A(10.0), blend.B(10.0))
        assert not result.controllable
        assert result.rank == 4


class TestControlabilidade:

    def test_duplo_integrador(self):
        result = is_controllable([[0.0, 1.0], [0.0, 0.0]], [0.0, 1.0])
        assert result.controllable
        assert result.rank == 2

    def test_nao_controlavel(self):
        result = is_controllable(np.eye(2), [[1.0], [0.0]])
        assert not result.controllable
        assert result.rank == 1

    def test_rejeita_b_incompativel(self):
        with pytest.raises(InvalidValueError):
            is_controllable(np.eye(2), np.ones((3, 1)))

    def test_numerical_rank(self):
        assert numerical_rank(np.zeros((3, 3))) == 0
        assert numerical_rank(np.diag([1.0, 1e-12, 0.0])) == 1
        assert numerical_rank(np.zeros((2, 0))) == 0


class TestGramiano:

    def test_forma_fechada_duplo_integrador(self):
        T = 2.0
        A = np.array([[0.0, 1.0], [0.0, 0.0]])
        B = np.array([[0.0], [1.0]])
        result = ltv_gramian(lambda t: A, lambda t: B, 0.0, T, 0.01)
        expected = np.array([[T**3 / 3, T**2 / 2], [T**2 / 2, T]])
        np.testing.assert_allclose(result.W, expected, rtol=1e-10, atol=1e-12)
        np.testing.assert_allclose(result.phi, scipy.linalg.expm(A * T), atol=1e-12)

    def test_oraculo_expm(self, rng):
        # Van Loan: expm([[−A, BBᵀ], [0, Aᵀ]] T) = [[·, F12], [0, F22]], W = F22ᵀ F12
        n, T = 3, 1.5
        A = rng.uniform(-1, 1, (n, n)) - 1.5 * np.eye(n)
        B = rng.uniform(-1, 1, (n, 2))
        M = np.block([[-A, B @ B.T], [np.zeros((n, n)), A.T]])
        F = scipy.linalg.expm(M * T)
        expected = F[n:, n:].T @ F[:n, n:]
        W = ltv_gramian(lambda t: A, lambda t: B, 0.0, T, 1e-3).W
        assert np.linalg.norm(W - expected) <= 1e-8 * np.linalg.norm(expected)

    def test_refinamento_de_dez_vezes(self):
        scenario = clutch_scenario(dt=1e-2)
        coarse = gramian(scenario).W
        blend = build_blend(scenario)
        fine = ltv_gramian(blend.A, blend.B, scenario.t0, scenario.te, 1e-3).W
        assert np.linalg.norm(coarse - fine) <= 1e-6 * np.linalg.norm(fine)

    def test_simetrico(self):
        W = gramian(double_integrator_scenario()).W
        np.testing.assert_array_equal(W, W.T)

    def test_posto_do_gramiano_exemplo(self):
        design = min_energy_control(double_integrator_scenario())
        assert design.gramian_rank == 4


class TestTransiente:

    def test_exemplo_realizado(self):
        result = realize_transience(double_integrator_scenario())
        target = np.array([1.0, 1.0, 2.0, 2.0, 1.0, 1.0])
        assert result.realized
        assert np.max(np.abs(result.z_te - target)) <= 1e-6
        assert result.reduced.dim == 3
        np.testing.assert_allclose(result.y_te, [1.0, 2.0, 1.0], atol=1e-6)
        assert result.distance <= 1e-6
        assert result.reason == ''

    def test_trajetoria_e_controles(self):
        scenario = double_integrator_scenario()
        result = realize_transience(scenario)
        traj = result.trajectory
        assert traj.times[0] == 10.0
        assert traj.times[-1] == pytest.approx(11.0)
        assert set(traj.dims) == {6}
        assert set(traj.labels) == {'transiente'}
        assert result.controls.shape == (len(traj), 2)

    def test_energia_positiva_e_residuo_pequeno(self):
        design = min_energy_control(double_integrator_scenario())
        assert design.energy > 0.0
        assert design.residual <= 1e-6
        np.testing.assert_allclose(design.predicted, design.z_target, atol=1e-6)

    def test_controle_interpolado_entre_nos(self):
        design = min_energy_control(double_integrator_scenario())
        half = design.gramian.half_times
        mid = 0.5 * (half[10] + half[11])
        np.testing.assert_allclose(design.u(mid),
                                   0.5 * (design.u(half[10]) + design.u(half[11])),
                                   rtol=1e-6, atol=1e-9)

    def test_alvo_subespaco(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        scenario = TransientScenario(sigma1, sigma2, 10.0, 11.0, MuSchedule.constant(0.5),
                                     [1.0, -1.0], target=SUBSPACE)
        result = realize_transience(scenario)
        assert result.realized
        z = result.z_target
        assert z[0] == pytest.approx(z[1])
        assert z[2] == pytest.approx(z[3])
        assert z[4] == pytest.approx(z[5])

    def test_subspace_target_e_projecao(self):
        scenario = double_integrator_scenario()
        z = subspace_target(scenario, np.array([1.0, 3.0, 0.0, 2.0, 5.0, 5.0]))
        np.testing.assert_allclose(z, [2, 2, 1, 1, 5, 5])

    def test_alvo_subespaco_respeita_alcancabilidade(self):
        # só a primeira coordenada recebe controle: W tem posto 1
        sigma1 = LinSys(np.zeros((2, 2)), [[1.0], [0.0]])
        sigma2 = LinSys([[0.0]], [[0.0]])
        scenario = TransientScenario(sigma1, sigma2, 0.0, 1.0, MuSchedule.constant(0.5),
                                     [0.0, 2.0], target=SUBSPACE)
        result = realize_transience(scenario)
        assert result.realized
        np.testing.assert_allclose(result.z_target, [2.0, 2.0], atol=1e-9)
        np.testing.assert_allclose(result.z_te, [2.0, 2.0], atol=1e-6)
        assert result.design.gramian_rank == 1

    def test_subspace_target_com_gramiano(self):
        scenario = TransientScenario(LinSys(np.zeros((2, 2)), [[1.0], [0.0]]),
                                     LinSys([[0.0]], [[0.0]]), 0.0, 1.0,
                                     MuSchedule.constant(0.5), [0.0, 2.0])
        endpoint = np.array([0.0, 2.0])
        np.testing.assert_allclose(subspace_target(scenario, endpoint, np.diag([1.0, 0.0])),
                                   [2.0, 2.0], atol=1e-12)
        np.testing.assert_allclose(subspace_target(scenario, endpoint, np.zeros((2, 2))),
                                   [1.0, 1.0], atol=1e-12)
        np.testing.assert_allclose(subspace_target(scenario, endpoint, np.eye(2)),
                                   [1.0, 1.0], atol=1e-12)

    def test_trajetoria_reproduz_ponto_previsto(self):
        dt = 0.01
        result = realize_transience(double_integrator_scenario(dt=dt))
        predicted = result.design.predicted
        scale = max(1.0, np.linalg.norm(predicted))
        assert np.linalg.norm(result.z_te - predicted) <= 10 * dt**4 * scale

    def test_janela_degenerada(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        scenario = TransientScenario(sigma1, sigma2, 3.0, 3.0, MuSchedule.constant(0.5),
                                     [1.0, 1.0])
        result = realize_transience(scenario)
        assert len(result.trajectory) == 1
        assert result.realized
        np.testing.assert_array_equal(result.z_te, np.ones(6))

    def test_nao_realizavel_simula_sem_controle(self):
        frozen = LinSys([[0.0]], [[0.0]])
        scenario = TransientScenario(frozen, frozen, 0.0, 1.0, MuSchedule.constant(0.5),
                                     [1.0], target=[2.0])
        result = realize_transience(scenario)
        assert not result.realized
        assert result.design is None
        assert 'resíduo' in result.reason
        np.testing.assert_allclose(result.z_te, [1.0])
        assert not np.any(result.controls)


class TestEmbreagem:

    def test_modelos_projetados(self):
        sigma1, sigma2 = clutch_systems()
        p1, p2 = clutch_models()
        np.testing.assert_allclose(p1.A, sigma1.A)
        assert p2.A.shape == (2, 2)
        assert p2.B.shape == (2, 2)
        np.testing.assert_allclose(p2.A, np.full((2, 2), sigma2.A[0, 0] / 2.0), atol=1e-12)

    def test_parametros_invalidos(self):
        with pytest.raises(InvalidValueError):
            clutch_systems(J_i=0.0)
        with pytest.raises(InvalidValueError):
            clutch_systems(d_o=-0.1)

    def test_acoplamento(self):
        result = realize_transience(clutch_scenario(tol=1e-4))
        omega_i, omega_o = result.z_te
        assert result.realized
        assert np.linalg.norm(result.z_te - OMEGA_TARGET) <= 1e-4
        assert abs(omega_i - omega_o) <= 1e-4
        assert result.reduced.dim == 1
        assert result.controls.shape[1] == 2


class TestFases:

    def test_referencia_afim(self):
        ref = Reference([11.0, -1.0], [-1.0, 0.0])
        np.testing.assert_allclose(ref.at(10.0, 0.0), [1.0, -1.0])
        np.testing.assert_array_equal(Reference([1.0]).rate, [0.0])
        with pytest.raises(InvalidValueError):
            Reference([1.0, 2.0], [1.0])

    def test_ganho_incompativel(self, integrator_systems):
        sigma1, _ = integrator_systems
        with pytest.raises(InvalidValueError):
            Phase(sigma1, POST_GAIN, 0.0, 1.0)

    def test_pre_fase_segue_rampa(self, integrator_systems):
        sigma1, _ = integrator_systems
        pre = Phase(sigma1, PD_GAIN, 0.0, 10.0,
                    reference=Reference([11.0, -1.0], [-1.0, 0.0]))
        traj = simulate_phase(pre, [0.0, 0.0], 1e-3, 'pre')
        np.testing.assert_allclose(traj.final, [1.0, -1.0], atol=1e-6)

    def test_execucao_completa(self):
        pre, post = double_integrator_phases(t_end=15.0)
        result = run_phased(pre, double_integrator_scenario(), post)
        assert result.transience.realized
        assert result.boundary_mismatch <= 1e-6
        np.testing.assert_allclose(result.pre.final, [1.0, -1.0], atol=1e-6)
        np.testing.assert_allclose(result.post.states[0], [1.0, 2.0, 1.0], atol=1e-6)
        traj = result.trajectory
        assert set(traj.labels) == {'pre', 'transiente', 'pos'}
        assert traj.dims[0] == 2 and traj.dims[-1] == 3
        assert max(traj.dims) == 6
        assert traj.times[-1] == pytest.approx(15.0)

    def test_pos_fase_estabiliza(self):
        pre, post = double_integrator_phases(t_end=25.0)
        result = run_phased(pre, double_integrator_scenario(), post)
        assert np.max(np.abs(result.post.final)) <= 1e-3

    def test_fronteira_fora_da_tolerancia(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        pre = Phase(sigma1, PD_GAIN, 0.0, 10.0, x0=[0.0, 0.0])
        post = Phase(sigma2, POST_GAIN, 11.0, 12.0)
        with pytest.raises(PhaseBoundaryError) as info:
            run_phased(pre, double_integrator_scenario(), post)
        assert info.value.mismatch > 0.5

    def test_janelas_desencaixadas(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        pre = Phase(sigma1, PD_GAIN, 0.0, 9.0)
        post = Phase(sigma2, POST_GAIN, 11.0, 12.0)
        with pytest.raises(PhaseBoundaryError):
            run_phased(pre, double_integrator_scenario(), post)

    def test_fases_de_comprimento_zero(self, integrator_systems):
        sigma1, sigma2 = integrator_systems
        pre = Phase(sigma1, PD_GAIN, 10.0, 10.0)
        post = Phase(sigma2, POST_GAIN, 11.0, 11.0)
        result = run_phased(pre, double_integrator_scenario(), post)
        assert result.pre is None and result.post is None
        assert set(result.trajectory.labels) == {'transiente'}
