"""Unit tests for Hamiltonian and state construction."""

import math

import numpy as np
import pytest

from ri_thermalizer.linalg import unitary_from_hamiltonian
from ri_thermalizer.models import (
    AncillaSpec,
    CounterRotating,
    IsotropicFlipFlop,
    RandomFull,
    SystemSpec,
    ancilla_thermal_state,
    bare_hamiltonian,
    gibbs_populations,
    interaction_hamiltonian,
    random_density_matrix,
    system_gibbs_state,
    system_hamiltonian,
    total_hamiltonian,
)


class TestSystemHamiltonian:
    @pytest.mark.parametrize(
        "d,omega,expected",
        [
            (3, 1.0, [-1.0, 0.0, 1.0]),
            (2, 1.0, [-0.5, 0.5]),
            (5, 1.0, [-2.0, -1.0, 0.0, 1.0, 2.0]),
        ],
    )
    def test_equidistant_diagonal(self, d, omega, expected):
        h = system_hamiltonian(SystemSpec(d=d, omega=omega))
        assert np.allclose(h, np.diag(expected), atol=0)

    def test_rejects_bad_specs(self):
        with pytest.raises(ValueError):
            SystemSpec(d=1)
        with pytest.raises(ValueError):
            SystemSpec(d=3, omega=0.0)


class TestAncillaState:
    def test_infinite_temperature(self):
        rho = ancilla_thermal_state(AncillaSpec(omega=1.0, beta=0.0))
        assert np.allclose(rho, np.eye(2) / 2, atol=0)

    def test_zero_temperature_sentinel(self):
        rho = ancilla_thermal_state(AncillaSpec(omega=1.0, beta=math.inf))
        assert np.array_equal(rho.real, np.diag([1.0, 0.0]))

    def test_unit_beta(self):
        spec = AncillaSpec(omega=1.0, beta=1.0)
        assert spec.ground_population == pytest.approx(1 / (1 + math.exp(-1)), abs=1e-15)
        assert spec.ground_population == pytest.approx(0.7310585786300049, abs=1e-12)


class TestGibbsState:
    def test_three_level_matches_pa_formula(self):
        beta, omega = 1.7, 1.0
        p_a = 1 / (1 + math.exp(-beta * omega))
        z = 1 - p_a + p_a**2
        expected = np.array([p_a**2, p_a * (1 - p_a), (1 - p_a) ** 2]) / z
        rho = system_gibbs_state(SystemSpec(d=3, omega=omega), beta)
        assert np.allclose(np.diag(rho).real, expected, atol=1e-14)

    def test_infinite_temperature_maximally_mixed(self):
        rho = system_gibbs_state(SystemSpec(d=4), 0.0)
        assert np.allclose(rho, np.eye(4) / 4, atol=0)

    def test_zero_temperature_ground_projector(self):
        rho = system_gibbs_state(SystemSpec(d=5), math.inf)
        expected = np.zeros((5, 5))
        expected[0, 0] = 1.0
        assert np.array_equal(rho.real, expected)

    def test_populations_sum_to_one(self):
        for beta in (0.0, 0.3, 2.0, 50.0, math.inf):
            p = gibbs_populations(6, 1.0, beta)
            assert p.sum() == pytest.approx(1.0, abs=1e-15)
            assert np.all(p >= 0)


class TestInteractionHamiltonian:
    def test_flip_flop_pattern_d3(self):
        h = interaction_hamiltonian(SystemSpec(d=3), IsotropicFlipFlop(j=0.8))
        expected = np.zeros((6, 6))
        expected[1, 2] = expected[2, 1] = 0.8
        expected[3, 4] = expected[4, 3] = 0.8
        assert np.allclose(h, expected, atol=0)

    def test_counter_rotating_adds_corner_entries(self):
        h = interaction_hamiltonian(SystemSpec(d=3), CounterRotating(j=0.8, j_prime=0.3))
        assert h[0, 3] == 0.3 and h[3, 0] == 0.3
        assert h[2, 5] == 0.3 and h[5, 2] == 0.3
        assert h[1, 2] == 0.8 and h[3, 4] == 0.8

    def test_zero_coupling_zero_matrix(self):
        h = interaction_hamiltonian(SystemSpec(d=4), IsotropicFlipFlop(j=0.0))
        assert np.count_nonzero(h) == 0

    def test_random_full_seed_reproducible(self):
        spec = SystemSpec(d=3)
        ispec = RandomFull(lo=0.1, hi=0.9, seed=42)
        a = interaction_hamiltonian(spec, ispec, collision=5)
        b = interaction_hamiltonian(spec, ispec, collision=5)
        assert np.array_equal(a, b)

    def test_random_full_fresh_per_collision(self):
        spec = SystemSpec(d=3)
        ispec = RandomFull(lo=0.1, hi=0.9, seed=42)
        a = interaction_hamiltonian(spec, ispec, collision=0)
        b = interaction_hamiltonian(spec, ispec, collision=1)
        assert not np.array_equal(a, b)

    def test_random_full_fills_whole_upper_triangle(self):
        h = interaction_hamiltonian(SystemSpec(d=3), RandomFull(lo=0.5, hi=0.9, seed=1))
        rows, cols = np.triu_indices(6, k=1)
        vals = h[rows, cols].real
        assert np.all((vals >= 0.5) & (vals <= 0.9))
        assert np.allclose(np.diag(h), 0.0, atol=0)


class TestTotalHamiltonian:
    def test_three_level_matrix_verbatim(self):
        h = total_hamiltonian(
            SystemSpec(d=3, omega=1.0),
            AncillaSpec(omega=1.0, beta=1.0),
            IsotropicFlipFlop(j=0.4),
        )
        expected = np.diag([-1.5, -0.5, -0.5, 0.5, 0.5, 1.5]).astype(complex)
        expected[1, 2] = expected[2, 1] = 0.4
        expected[3, 4] = expected[4, 3] = 0.4
        assert np.allclose(h, expected, atol=0)

    def test_all_variants_hermitian(self):
        sys = SystemSpec(d=4)
        for ispec in (
            IsotropicFlipFlop(j=0.7),
            CounterRotating(j=0.7, j_prime=0.2),
            RandomFull(lo=-1.0, hi=1.0, seed=9),
        ):
            h = total_hamiltonian(sys, AncillaSpec(omega=1.0, beta=2.0), ispec)
            assert np.max(np.abs(h - h.conj().T)) <= 1e-14

    def test_flip_flop_conserves_energy(self):
        rng = np.random.default_rng(11)
        sys = SystemSpec(d=3, omega=1.0)
        anc = AncillaSpec(omega=1.0, beta=1.0)
        h0 = bare_hamiltonian(sys, anc)
        h = total_hamiltonian(sys, anc, IsotropicFlipFlop(j=0.6))
        for tau in rng.uniform(0.1, 5.0, size=4):
            u = unitary_from_hamiltonian(h, tau)
            comm = u @ h0 - h0 @ u
            assert np.max(np.abs(comm)) <= 1e-10

    def test_collision_unitary_entrywise_d3(self):
        # closed form of exp(-i H_tot tau) for the resonant flip-flop model:
        # phase e^{-i E tau} on each degenerate block, cos/sin mixing inside
        from ri_thermalizer.collisions import collision_unitary
        from ri_thermalizer.models import flip_flop_model

        omega, j, tau = 1.0, 0.4, 0.7
        got = collision_unitary(flip_flop_model(3, omega, 1.0, j), tau)
        c, s = np.cos(j * tau), np.sin(j * tau)
        expected = np.zeros((6, 6), dtype=complex)
        expected[0, 0] = np.exp(1.5j * tau * omega)
        expected[5, 5] = np.exp(-1.5j * tau * omega)
        for base, phase in ((1, np.exp(0.5j * tau * omega)), (3, np.exp(-0.5j * tau * omega))):
            expected[base, base] = expected[base + 1, base + 1] = phase * c
            expected[base, base + 1] = expected[base + 1, base] = -1j * phase * s
        assert np.max(np.abs(got - expected)) <= 1e-14

    def test_no_coupling_is_diagonal(self):
        h = total_hamiltonian(
            SystemSpec(d=3), AncillaSpec(omega=1.0, beta=1.0), CounterRotating(j=0.0, j_prime=0.0)
        )
        assert np.count_nonzero(h - np.diag(np.diag(h))) == 0

    def test_gibbs_commutes_with_system_hamiltonian(self):
        sys = SystemSpec(d=5)
        h = system_hamiltonian(sys)
        rho = system_gibbs_state(sys, 0.8)
        assert np.max(np.abs(h @ rho - rho @ h)) == 0.0


def test_random_density_matrix_valid():
    rng = np.random.default_rng(12)
    rho = random_density_matrix(4, rng)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-13)
    assert np.max(np.abs(rho - rho.conj().T)) <= 1e-14
    assert np.linalg.eigvalsh(rho).min() >= -1e-12
