"""Repeated-interaction dynamics.

Three execution paths compute the same physics at different cost:

* the brute-force CPTP map (one joint unitary + partial trace per
  collision), valid for every interaction variant;
* exact recursion maps for the energy-conserving resonant model, where
  populations evolve under a tridiagonal stochastic matrix built from the
  eta rates and the three-level coherences under the psi rates;
* fixed-step RK4 integration of the stroboscopic-Lindblad (SL) ODEs that
  the discrete map converges to when J*tau -> 0 at fixed Gamma = J^2 tau.

Population and coherence dynamics decouple for the energy-conserving
interaction, so diagonal initial states stay diagonal and can be evolved
as plain probability vectors.

A note on two SL equations transcribed from one-collision recursions
rather than from their printed ODE forms: the c23 equation carries a
+Gamma*(1-p_A)*c12 feed (the printed sign disagrees with the exact
recursion and fails to track the discrete map), and in the
non-energy-conserving system the p1 equation keeps the p_A*p2 and p_A*p1
cross terms (dropping them breaks probability conservation) while c13 is
damped at (Gamma1+Gamma2)/2, the rate the recursion actually yields.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded, StepTooLarge, SumNotZero
from .linalg import kron, partial_trace_second, trace_distance, unitary_from_hamiltonian
from .models import (
    ModelSpec,
    RandomFull,
    ancilla_thermal_state,
    system_gibbs_state,
    total_hamiltonian,
)

DEVIATION_SUM_TOL = 1e-12


@dataclass(frozen=True)
class CollisionConfig:
    """Collision duration, collision cap, and trace-distance target."""

    tau: float
    n_max: int
    epsilon: float

    def __post_init__(self):
        if self.tau <= 0:
            raise ValueError("tau must be positive")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")


@dataclass
class TrajectoryRecord:
    """Per-collision states and trace distances to the target state."""

    states: list = field(default_factory=list)
    distances: list = field(default_factory=list)

    def append(self, state: np.ndarray, distance: float) -> None:
        self.states.append(state)
        self.distances.append(distance)


# ---------------------------------------------------------------------------
# Exact one-collision rates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EtaCoefficients:
    """Dimensionless population rates of the energy-conserving collision."""

    eta11: float
    eta12: float
    eta21: float
    eta22: float
    eta33: float


@dataclass(frozen=True)
class PsiCoefficients:
    """Dimensionless three-level coherence rates of the same collision."""

    psi11: float
    psi13: float
    psi22: float
    psi31: float
    psi33: float


def eta_coefficients(p_a: float, j_tau: float) -> EtaCoefficients:
    """Population rates; eta12 doubles as eta23 and eta21 as eta32."""
    lam = math.cos(2.0 * j_tau)
    return EtaCoefficients(
        eta11=0.5 * ((1.0 + p_a) + (1.0 - p_a) * lam),
        eta12=0.5 * p_a * (1.0 - lam),
        eta21=0.5 * (1.0 - p_a) * (1.0 - lam),
        eta22=0.5 * (1.0 + lam),
        eta33=1.0 - 0.5 * p_a * (1.0 - lam),
    )


def psi_coefficients(p_a: float, j_tau: float) -> PsiCoefficients:
    """Coherence rates; at p_A = 1 they reduce to (mu, lambda-, mu, 0, lambda+)."""
    lam = math.cos(2.0 * j_tau)
    mu = math.cos(j_tau)
    return PsiCoefficients(
        psi11=0.5 * (1.0 - p_a + 2.0 * p_a * mu + (1.0 - p_a) * lam),
        psi13=0.5 * p_a * (1.0 - lam),
        psi22=mu,
        psi31=0.5 * (1.0 - p_a - (1.0 - p_a) * lam),
        psi33=0.5 * (p_a + 2.0 * (1.0 - p_a) * mu + p_a * lam),
    )


def population_step_matrix(d: int, p_a: float, j_tau: float) -> np.ndarray:
    """Tridiagonal one-collision map acting on population vectors.

    Column-stochastic; fixes the Gibbs populations and acts identically on
    raw populations and on deviations from them.
    """
    e = eta_coefficients(p_a, j_tau)
    m = np.zeros((d, d))
    for k in range(d - 1):
        m[k, k + 1] = e.eta12
        m[k + 1, k] = e.eta21
    for k in range(1, d - 1):
        m[k, k] = e.eta22
    m[0, 0] = e.eta11
    m[d - 1, d - 1] = e.eta33
    return m


def step_populations_recursive(
    delta_p: np.ndarray, p_a: float, j_tau: float
) -> np.ndarray:
    """Advance a deviation-from-equilibrium vector by one collision."""
    delta_p = np.asarray(delta_p, dtype=float)
    total = float(delta_p.sum())
    if abs(total) > DEVIATION_SUM_TOL:
        raise SumNotZero(f"deviations sum to {total:.3e}")
    return population_step_matrix(delta_p.size, p_a, j_tau) @ delta_p


def evolve_populations(
    p0: np.ndarray, p_a: float, j_tau: float, n: int
) -> np.ndarray:
    """Iterate the population map; returns an (n+1, d) trajectory array."""
    p = np.asarray(p0, dtype=float)
    m = population_step_matrix(p.size, p_a, j_tau)
    out = np.empty((n + 1, p.size))
    out[0] = p
    for step in range(1, n + 1):
        p = m @ p
        out[step] = p
    return out


def step_coherences_d3(
    c12: complex,
    c13: complex,
    c23: complex,
    p_a: float,
    j_tau: float,
    omega_tau: float,
) -> tuple[complex, complex, complex]:
    """One collision acting on the three-level coherences (c12, c13, c23)."""
    psi = psi_coefficients(p_a, j_tau)
    phase = complex(math.cos(omega_tau), math.sin(omega_tau))
    return (
        phase * (c12 * psi.psi11 + c23 * psi.psi13),
        phase * phase * c13 * psi.psi22,
        phase * (c12 * psi.psi31 + c23 * psi.psi33),
    )


def evolve_coherences_d3(
    c0: tuple[complex, complex, complex],
    p_a: float,
    j_tau: float,
    omega_tau: float,
    n: int,
) -> np.ndarray:
    """Iterate the coherence map; returns an (n+1, 3) complex array."""
    out = np.empty((n + 1, 3), dtype=complex)
    out[0] = c0
    c12, c13, c23 = c0
    for step in range(1, n + 1):
        c12, c13, c23 = step_coherences_d3(c12, c13, c23, p_a, j_tau, omega_tau)
        out[step] = (c12, c13, c23)
    return out


def density_matrix_d3(p: np.ndarray, c12: complex, c13: complex, c23: complex) -> np.ndarray:
    """Assemble a three-level density matrix from populations and coherences."""
    return np.array(
        [
            [p[0], c12, c13],
            [np.conj(c12), p[1], c23],
            [np.conj(c13), np.conj(c23), p[2]],
        ],
        dtype=complex,
    )


# ---------------------------------------------------------------------------
# Brute-force CPTP map
# ---------------------------------------------------------------------------


def collision_unitary(model: ModelSpec, tau: float, collision: int = 0) -> np.ndarray:
    """Joint unitary exp(-i H_tot tau) for the given collision index."""
    h_tot = total_hamiltonian(model.system, model.ancilla, model.interaction, collision)
    return unitary_from_hamiltonian(h_tot, tau)


def collide_once(
    rho_s: np.ndarray,
    model: ModelSpec,
    cfg: CollisionConfig,
    collision: int = 0,
    unitary: np.ndarray | None = None,
) -> np.ndarray:
    """Apply one CPTP collision: Tr_A[U (rho_S x rho_A) U^dagger]."""
    if unitary is None:
        unitary = collision_unitary(model, cfg.tau, collision)
    joint = kron(np.asarray(rho_s, dtype=complex), ancilla_thermal_state(model.ancilla))
    evolved = unitary @ joint @ unitary.conj().T
    return partial_trace_second(evolved, model.system.d, 2)


def evolve(
    rho0: np.ndarray,
    model: ModelSpec,
    cfg: CollisionConfig,
    n: int,
    target: np.ndarray | None = None,
) -> TrajectoryRecord:
    """Run n brute-force collisions, recording states and distances to target.

    The target defaults to the system Gibbs state at the ancilla
    temperature.  RandomFull interactions re-draw couplings (and hence the
    unitary) before every collision; all other variants reuse one unitary.
    """
    if n > cfg.n_max:
        raise CapExceeded(f"n = {n} exceeds cap {cfg.n_max}")
    if target is None:
        target = system_gibbs_state(model.system, model.ancilla.beta)
    fresh_each = isinstance(model.interaction, RandomFull)
    unitary = None if fresh_each else collision_unitary(model, cfg.tau)
    rho = np.asarray(rho0, dtype=complex)
    record = TrajectoryRecord()
    record.append(rho, trace_distance(rho, target))
    for step in range(n):
        rho = collide_once(rho, model, cfg, collision=step, unitary=unitary)
        record.append(rho, trace_distance(rho, target))
    return record


# ---------------------------------------------------------------------------
# Zero-temperature closed forms
# ---------------------------------------------------------------------------


def zero_temp_populations_closed(p0: np.ndarray, n: int, j_tau: float) -> np.ndarray:
    """Populations after n collisions at p_A = 1, any dimension.

    Level d-k (1-based) collects binomially weighted decay from the levels
    above it; the ground population follows from normalization.
    """
    p0 = np.asarray(p0, dtype=float)
    d = p0.size
    lp = math.cos(j_tau) ** 2
    lm = math.sin(j_tau) ** 2
    p = np.empty(d)
    for k in range(d - 1):
        acc = 0.0
        for j in range(min(k, n) + 1):
            acc += math.comb(n, j) * lm**j * lp ** (n - j) * p0[d - 1 - k + j]
        p[d - 1 - k] = acc
    p[0] = 1.0 - p[1:].sum()
    return p


def zero_temp_coherences_d3_closed(
    c0: tuple[complex, complex, complex],
    n: int,
    j_tau: float,
    omega_tau: float,
) -> tuple[complex, complex, complex]:
    """Three-level coherences after n collisions at p_A = 1.

    c12 mixes a mu^n and a lambda_+^n mode; at the degenerate point
    lambda_+ = mu the coefficient collapses to the analytic limit
    n * mu^(n-1) * lambda_- instead of a 0/0 cancellation.
    """
    if n == 0:
        return tuple(c0)
    c12_0, c13_0, c23_0 = c0
    mu = math.cos(j_tau)
    lp = mu * mu
    lm = math.sin(j_tau) ** 2
    phase = complex(math.cos(omega_tau), math.sin(omega_tau))
    c13 = phase ** (2 * n) * mu**n * c13_0
    c23 = phase**n * lp**n * c23_0
    if abs(lp - mu) < 1e-12:
        c12 = phase**n * (mu**n * c12_0 + n * mu ** (n - 1) * lm * c23_0)
    else:
        b = lm * c23_0 / (lp - mu)
        c12 = phase**n * ((c12_0 - b) * mu**n + b * lp**n)
    return c12, c13, c23


# ---------------------------------------------------------------------------
# Stroboscopic-Lindblad ODEs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OdeTrajectory:
    """Fixed-step integration output; values holds one state row per time."""

    times: np.ndarray
    values: np.ndarray


def _resolve_step(t_end: float, dt: float | None, gamma_max: float) -> float:
    if dt is None:
        dt = 0.01 / gamma_max if gamma_max > 0 else t_end / 100.0
    if dt <= 0:
        raise ValueError("dt must be positive")
    if dt * gamma_max > 0.1:
        raise StepTooLarge(f"dt * Gamma_max = {dt * gamma_max:.3g} exceeds 0.1")
    return dt


def _rk4(rhs, y0: np.ndarray, t_end: float, dt: float) -> OdeTrajectory:
    steps = max(1, math.ceil(t_end / dt - 1e-12))
    h = t_end / steps
    y = np.array(y0)
    times = np.linspace(0.0, t_end, steps + 1)
    values = np.empty((steps + 1,) + y.shape, dtype=y.dtype)
    values[0] = y
    for i in range(1, steps + 1):
        k1 = rhs(y)
        k2 = rhs(y + 0.5 * h * k1)
        k3 = rhs(y + 0.5 * h * k2)
        k4 = rhs(y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        values[i] = y
    return OdeTrajectory(times=times, values=values)


def sl_population_generator(d: int, p_a: float, gamma: float) -> np.ndarray:
    """Tridiagonal SL rate matrix: upward rate Gamma*p_A, downward Gamma*(1-p_A)."""
    gen = np.zeros((d, d))
    for k in range(d - 1):
        gen[k, k + 1] = gamma * p_a
        gen[k + 1, k] = gamma * (1.0 - p_a)
    np.fill_diagonal(gen, -gen.sum(axis=0))
    return gen


def sl_ode_populations(
    p0: np.ndarray, p_a: float, gamma: float, t_end: float, dt: float | None = None
) -> OdeTrajectory:
    """Integrate the population SL ODE for any dimension (RK4, fixed step)."""
    p0 = np.asarray(p0, dtype=float)
    dt = _resolve_step(t_end, dt, gamma)
    gen = sl_population_generator(p0.size, p_a, gamma)
    return _rk4(lambda p: gen @ p, p0, t_end, dt)


def sl_ode_coherences_d3(
    c0: tuple[complex, complex, complex],
    p_a: float,
    gamma: float,
    t_end: float,
    dt: float | None = None,
) -> OdeTrajectory:
    """Integrate the three-level coherence SL ODE for (c12, c13, c23)."""
    dt = _resolve_step(t_end, dt, gamma)
    # c12 feed into c23 enters with +(1-p_A), per the exact recursion expansion
    gen = gamma * np.array(
        [
            [-0.5 * (2.0 - p_a), 0.0, p_a],
            [0.0, -0.5, 0.0],
            [1.0 - p_a, 0.0, -0.5 * (1.0 + p_a)],
        ],
        dtype=complex,
    )
    return _rk4(lambda c: gen @ c, np.asarray(c0, dtype=complex), t_end, dt)


def sl_ode_nonconserving_d3(
    p0: np.ndarray,
    c13_0: complex,
    p_a: float,
    gamma1: float,
    gamma2: float,
    gamma12: float,
    t_end: float,
    dt: float | None = None,
) -> OdeTrajectory:
    """Integrate the coupled (populations, c13) system of the counter-rotating
    SL limit.  State rows are (p1, p2, p3, Re c13, Im c13); c12/c23 decouple
    from this subsystem and are not propagated.
    """
    g1, g2, g12 = gamma1, gamma2, gamma12
    dt = _resolve_step(t_end, dt, max(g1, g2, abs(g12)))
    damp = 0.5 * (g1 + g2)
    gen = np.array(
        [
            [-(g1 * (1 - p_a) + g2 * p_a), g1 * p_a + g2 * (1 - p_a), 0.0, -g12, 0.0],
            [g2 * p_a + g1 * (1 - p_a), -(g1 + g2), g2 * (1 - p_a) + g1 * p_a, 2 * g12, 0.0],
            [0.0, g1 * (1 - p_a) + g2 * p_a, -(g1 * p_a + g2 * (1 - p_a)), -g12, 0.0],
            [-0.5 * g12, g12, -0.5 * g12, -damp, 0.0],
            [0.0, 0.0, 0.0, 0.0, -damp],
        ]
    )
    y0 = np.array([p0[0], p0[1], p0[2], c13_0.real, c13_0.imag], dtype=float)
    return _rk4(lambda y: gen @ y, y0, t_end, dt)
