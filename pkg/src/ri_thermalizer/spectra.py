"""Spectral analysis of the discrete population map and its SL generator.

Both matrices are tridiagonal with constant bands, so their full spectra
are closed-form: after the stationary eigenvalue, the remaining ones sit
on a cosine ladder scaled by theta = sqrt(p_A (1 - p_A)).  The three-level
slow-mode machinery (biorthogonal eigenvectors, projection alpha_2, and
the amplitude entering the simulation-time estimates) lives here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .collisions import population_step_matrix, sl_population_generator
from .errors import AmplitudeTooSmall, DegenerateTemperature, FrozenDynamics, SumNotZero

DEVIATION_SUM_TOL = 1e-12


def theta(p_a: float) -> float:
    """Temperature factor sqrt(p_A (1 - p_A)), in [0, 1/2]."""
    return math.sqrt(max(p_a * (1.0 - p_a), 0.0))


def stochastic_matrix(d: int, p_a: float, j_tau: float) -> np.ndarray:
    """Column-stochastic one-collision population map (tridiagonal)."""
    if d < 2:
        raise ValueError("need d >= 2")
    return population_step_matrix(d, p_a, j_tau)


def liouvillian_matrix(d: int, p_a: float, gamma: float) -> np.ndarray:
    """Tridiagonal SL population generator; columns sum to zero."""
    if gamma <= 0:
        raise ValueError("Gamma must be positive")
    return sl_population_generator(d, p_a, gamma)


def xi_closed(d: int, p_a: float, j_tau: float) -> np.ndarray:
    """Eigenvalues of the stochastic map: 1, then lambda_+ + 2 theta lambda_- cos(m pi / d)."""
    lp = math.cos(j_tau) ** 2
    lm = math.sin(j_tau) ** 2
    th = theta(p_a)
    tail = lp + 2.0 * th * lm * np.cos(np.arange(1, d) * math.pi / d)
    return np.concatenate(([1.0], tail))


def lambda_closed(d: int, p_a: float, gamma: float) -> np.ndarray:
    """Eigenvalues of the SL generator: 0, then -Gamma (1 - 2 theta cos(m pi / d))."""
    th = theta(p_a)
    tail = -gamma * (1.0 - 2.0 * th * np.cos(np.arange(1, d) * math.pi / d))
    return np.concatenate(([0.0], tail))


# ---------------------------------------------------------------------------
# Three-level slow-mode machinery
# ---------------------------------------------------------------------------


def stationary_populations_d3(p_a: float) -> np.ndarray:
    """Thermal fixed point (p1*, p2*, p3*) expressed through p_A."""
    z = 1.0 - p_a + p_a * p_a
    return np.array([p_a * p_a, p_a * (1.0 - p_a), (1.0 - p_a) ** 2]) / z


def _check_projection_domain(p_a: float) -> float:
    if p_a == 1.0 or p_a == 0.5:
        raise DegenerateTemperature(
            "slow-mode projection undefined at p_A exactly 1 or 1/2"
        )
    if not 0.5 < p_a < 1.0:
        raise ValueError("p_A must lie in (1/2, 1)")
    return theta(p_a)


def right_eigenvectors_d3(p_a: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right eigenvectors (v1, v2, v3) shared by the stochastic map and the
    SL generator; v1 is the fixed point, v2/v3 are normalized to last entry 1."""
    th = _check_projection_domain(p_a)
    v1 = stationary_populations_d3(p_a)
    v2 = np.array([-th / (1.0 - p_a), (th - 1.0 + p_a) / (1.0 - p_a), 1.0])
    v3 = np.array([th / (1.0 - p_a), (-th - 1.0 + p_a) / (1.0 - p_a), 1.0])
    return v1, v2, v3


def left_slow_eigenvector_d3(p_a: float) -> np.ndarray:
    """Left eigenvector u2 dual to v2 (u2 . v_j = delta_2j)."""
    th = _check_projection_domain(p_a)
    return (
        np.array([-(1.0 - p_a) * th / p_a, -1.0 + p_a + th, p_a])
        / (2.0 * (1.0 - th))
    )


@dataclass(frozen=True)
class SlowModeSummary:
    """Projection of an initial deviation onto the slow relaxation mode.

    ``amplitude`` is the coefficient entering both simulation-time
    estimates; the SL-limit form |alpha2| (p2* + 2 theta/(1-p_A)) and the
    discrete-map form |alpha2| (p2* + 2 p_A/theta) are algebraically equal
    because theta^2 = p_A (1 - p_A).

    The associated spectra come from :func:`lambda_closed` (SL) and
    :func:`xi_closed` (discrete).
    """

    theta: float
    alpha2: float
    amplitude: float


def slow_mode_projection(delta_p0: np.ndarray, p_a: float) -> SlowModeSummary:
    """Project a three-level initial deviation onto the slow mode."""
    delta_p0 = np.asarray(delta_p0, dtype=float)
    if delta_p0.shape != (3,):
        raise ValueError("slow-mode projection is derived for d = 3 only")
    total = float(delta_p0.sum())
    if abs(total) > DEVIATION_SUM_TOL:
        raise SumNotZero(f"deviations sum to {total:.3e}")
    th = _check_projection_domain(p_a)
    alpha2 = float(left_slow_eigenvector_d3(p_a) @ delta_p0)
    p2_star = stationary_populations_d3(p_a)[1]
    amplitude = abs(alpha2) * (p2_star + 2.0 * th / (1.0 - p_a))
    return SlowModeSummary(theta=th, alpha2=alpha2, amplitude=amplitude)


def tsim_estimate_sl(
    delta_p0: np.ndarray, p_a: float, gamma: float, epsilon: float
) -> float:
    """Slow-mode simulation-time estimate ln(2 eps / C) / lambda_2."""
    summary = slow_mode_projection(delta_p0, p_a)
    if summary.amplitude <= 2.0 * epsilon:
        raise AmplitudeTooSmall(
            f"C = {summary.amplitude:.3e} must exceed 2*epsilon = {2 * epsilon:.3e}"
        )
    lam2 = -gamma * (1.0 - summary.theta)
    return math.log(2.0 * epsilon / summary.amplitude) / lam2


def nstar_estimate_discrete(
    delta_p0: np.ndarray, p_a: float, j_tau: float, epsilon: float
) -> float:
    """Slow-mode collision-count estimate ln(2 eps / K) / ln(xi_2)."""
    summary = slow_mode_projection(delta_p0, p_a)
    if summary.amplitude <= 2.0 * epsilon:
        raise AmplitudeTooSmall(
            f"K = {summary.amplitude:.3e} must exceed 2*epsilon = {2 * epsilon:.3e}"
        )
    lp = math.cos(j_tau) ** 2
    lm = math.sin(j_tau) ** 2
    xi2 = lp + summary.theta * lm
    if xi2 >= 1.0:
        raise FrozenDynamics("xi_2 = 1: J*tau is a multiple of pi")
    return math.log(2.0 * epsilon / summary.amplitude) / math.log(xi2)


def c13_steady_state(
    gamma1: float, gamma2: float, gamma12: float, p_star: np.ndarray
) -> float:
    """Stationary long-range coherence of the non-energy-conserving SL system.

    Setting dc13/dt = 0 with the recursion-derived damping (Gamma1+Gamma2)/2
    gives Gamma12/(Gamma1+Gamma2) * (2 p2* - p1* - p3*).
    """
    if gamma1 + gamma2 <= 0:
        raise ValueError("Gamma1 + Gamma2 must be positive")
    p1, p2, p3 = p_star
    return gamma12 / (gamma1 + gamma2) * (2.0 * p2 - p1 - p3)
