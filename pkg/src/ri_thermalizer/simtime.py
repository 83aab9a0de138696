"""Simulation cost: minimal collision counts and crossing times.

The discrete count n* is the first collision after which the trace
distance to the target Gibbs state drops to epsilon; T_sim = n* tau.  At
zero temperature both admit closed forms through the lower branch of the
Lambert-W function (three levels) or through one-dimensional
transcendental equations (any dimension), solved here by doubling
brackets plus bisection on their eventually-decreasing tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .collisions import (
    CollisionConfig,
    collide_once,
    collision_unitary,
    density_matrix_d3,
    population_step_matrix,
    sl_population_generator,
    step_coherences_d3,
)
from .errors import (
    EpsilonTooLarge,
    FrozenDynamics,
    InstantCase,
    NoConvergence,
    NoRootBelowCap,
    OutOfDomain,
)
from .linalg import trace_distance
from .models import IsotropicFlipFlop, ModelSpec, RandomFull, gibbs_populations

MODE_DISCRETE = "discrete"
MODE_CONTINUOUS_SL = "continuous_sl"

_NEG_INV_E = -math.exp(-1.0)


@dataclass(frozen=True)
class ThermalizationResult:
    """Outcome of a thermalization run; unreachable targets leave the
    count/time fields at None instead of raising."""

    n_star: int | None
    t_sim: float | None
    final_distance: float
    mode: str

    @property
    def reachable(self) -> bool:
        if self.mode == MODE_DISCRETE:
            return self.n_star is not None
        return self.t_sim is not None


# ---------------------------------------------------------------------------
# Lambert W
# ---------------------------------------------------------------------------


def _branch_point_series(z: float, sign: float) -> float:
    # expansion in p = +-sqrt(2 (1 + e z)) around the branch point (-1/e, -1)
    p2 = max(2.0 * (1.0 + math.e * z), 0.0)
    p = sign * math.sqrt(p2)
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))))


def lambert_w(z: float, branch: int = 0) -> float:
    """Real Lambert-W branches: W0 on z >= -1/e, W-1 on -1/e <= z < 0.

    Halley iteration from an asymptotic initial guess; within 1e-6 of the
    branch point the square-root series is used instead, where the
    iteration's denominator degenerates.
    """
    if branch not in (0, -1):
        raise ValueError("branch must be 0 or -1")
    if z < _NEG_INV_E - 1e-15:
        raise OutOfDomain(f"z = {z!r} below the branch point -1/e")
    if branch == -1 and z >= 0.0:
        raise OutOfDomain("W_-1 requires -1/e <= z < 0")
    sign = 1.0 if branch == 0 else -1.0
    if z - _NEG_INV_E < 1e-6:
        return _branch_point_series(z, sign)

    if branch == -1:
        log_neg_z = math.log(-z)
        w = log_neg_z - math.log(-log_neg_z)
    elif z > math.e:
        w = math.log(z) - math.log(math.log(z))
    elif z - _NEG_INV_E < 0.3:
        w = _branch_point_series(z, sign)
    else:
        w = math.log1p(z)

    tol = 1e-13 * max(1.0, abs(z))
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        if abs(f) <= tol:
            return w
        wp1 = w + 1.0
        w -= f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
    if abs(w * math.exp(w) - z) <= 1e-12 * max(1.0, abs(z)):
        return w
    raise NoConvergence(f"Halley iteration stalled for z = {z!r}, branch {branch}")


# ---------------------------------------------------------------------------
# Simulated crossings
# ---------------------------------------------------------------------------


def population_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Trace distance restricted to diagonal states: 0.5 * sum |p - q|."""
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def _is_diagonal(rho: np.ndarray) -> bool:
    return float(np.max(np.abs(rho - np.diag(np.diag(rho))))) < 1e-14


def _recursion_applicable(model: ModelSpec) -> bool:
    return (
        isinstance(model.interaction, IsotropicFlipFlop)
        and model.system.omega == model.ancilla.omega
    )


def nstar_simulated(
    rho0: np.ndarray,
    model: ModelSpec,
    cfg: CollisionConfig,
    engine: str = "auto",
) -> ThermalizationResult:
    """First collision count n with D(rho^(n), Gibbs target) <= epsilon.

    engine is one of "auto", "recursion", "brute_force".  The recursion
    path requires the resonant energy-conserving model; "auto" selects it
    when valid (falling back to the full CPTP map for coherent initial
    states above d = 3, where no coherence recursion is implemented).
    """
    rho0 = np.asarray(rho0, dtype=complex)
    d = model.system.d
    target_p = gibbs_populations(d, model.system.omega, model.ancilla.beta)
    diagonal = _is_diagonal(rho0)
    recursion_ok = _recursion_applicable(model) and (diagonal or d == 3)
    if engine == "auto":
        engine = "recursion" if recursion_ok else "brute_force"
    elif engine == "recursion" and not recursion_ok:
        raise ValueError("recursion engine unavailable for this model/state")
    elif engine not in ("recursion", "brute_force"):
        raise ValueError(f"unknown engine {engine!r}")

    if engine == "recursion":
        return _nstar_recursion(rho0, model, cfg, target_p, diagonal)
    return _nstar_brute_force(rho0, model, cfg, target_p)


def _result_from_scan(n_cross, distance, tau) -> ThermalizationResult:
    if n_cross is None:
        return ThermalizationResult(None, None, distance, MODE_DISCRETE)
    return ThermalizationResult(n_cross, n_cross * tau, distance, MODE_DISCRETE)


def _nstar_recursion(rho0, model, cfg, target_p, diagonal) -> ThermalizationResult:
    p_a = model.ancilla.ground_population
    j_tau = model.interaction.j * cfg.tau
    omega_tau = model.system.omega * cfg.tau
    step = population_step_matrix(model.system.d, p_a, j_tau)
    p = np.diag(rho0).real.copy()
    if diagonal:
        dist = population_distance(p, target_p)
        if dist <= cfg.epsilon:
            return _result_from_scan(0, dist, cfg.tau)
        for n in range(1, cfg.n_max + 1):
            p = step @ p
            dist = population_distance(p, target_p)
            if dist <= cfg.epsilon:
                return _result_from_scan(n, dist, cfg.tau)
        return _result_from_scan(None, dist, cfg.tau)
    target = np.diag(target_p.astype(complex))
    c12, c13, c23 = rho0[0, 1], rho0[0, 2], rho0[1, 2]
    dist = trace_distance(rho0, target)
    if dist <= cfg.epsilon:
        return _result_from_scan(0, dist, cfg.tau)
    for n in range(1, cfg.n_max + 1):
        p = step @ p
        c12, c13, c23 = step_coherences_d3(c12, c13, c23, p_a, j_tau, omega_tau)
        dist = trace_distance(density_matrix_d3(p, c12, c13, c23), target)
        if dist <= cfg.epsilon:
            return _result_from_scan(n, dist, cfg.tau)
    return _result_from_scan(None, dist, cfg.tau)


def _nstar_brute_force(rho0, model, cfg, target_p) -> ThermalizationResult:
    target = np.diag(target_p.astype(complex))
    fresh_each = isinstance(model.interaction, RandomFull)
    unitary = None if fresh_each else collision_unitary(model, cfg.tau)
    rho = rho0
    dist = trace_distance(rho, target)
    if dist <= cfg.epsilon:
        return _result_from_scan(0, dist, cfg.tau)
    for n in range(1, cfg.n_max + 1):
        rho = collide_once(rho, model, cfg, collision=n - 1, unitary=unitary)
        dist = trace_distance(rho, target)
        if dist <= cfg.epsilon:
            return _result_from_scan(n, dist, cfg.tau)
    return _result_from_scan(None, dist, cfg.tau)


def tsim_simulated_sl(
    p0: np.ndarray,
    p_a: float,
    gamma: float,
    epsilon: float,
    t_max: float,
    dt: float | None = None,
) -> ThermalizationResult:
    """Crossing time of the SL population ODE below trace distance epsilon.

    Fixed-step RK4 scan; the bracketing step is then refined by bisection,
    re-stepping from the last pre-crossing state, so the reported time is
    far more accurate than the scan resolution.
    """
    p0 = np.asarray(p0, dtype=float)
    d = p0.size
    if dt is None:
        dt = 0.01 / gamma if gamma > 0 else t_max / 100.0
    gen = sl_population_generator(d, p_a, gamma)
    ratio = (1.0 - p_a) / p_a
    target = ratio ** np.arange(d)
    target /= target.sum()

    def rk4_step(y, h):
        k1 = gen @ y
        k2 = gen @ (y + 0.5 * h * k1)
        k3 = gen @ (y + 0.5 * h * k2)
        k4 = gen @ (y + h * k3)
        return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    p = p0.copy()
    dist = population_distance(p, target)
    if dist <= epsilon:
        return ThermalizationResult(None, 0.0, dist, MODE_CONTINUOUS_SL)
    steps = max(1, math.ceil(t_max / dt))
    h = t_max / steps
    t = 0.0
    for _ in range(steps):
        p_next = rk4_step(p, h)
        dist = population_distance(p_next, target)
        if dist <= epsilon:
            lo, hi = 0.0, h
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if population_distance(rk4_step(p, mid), target) <= epsilon:
                    hi = mid
                else:
                    lo = mid
            t_cross = t + hi
            d_cross = population_distance(rk4_step(p, hi), target)
            return ThermalizationResult(None, t_cross, d_cross, MODE_CONTINUOUS_SL)
        p = p_next
        t += h
    return ThermalizationResult(None, None, dist, MODE_CONTINUOUS_SL)


# ---------------------------------------------------------------------------
# Zero-temperature closed forms (three levels)
# ---------------------------------------------------------------------------


def _lambdas(j_tau: float) -> tuple[float, float]:
    lp = math.cos(j_tau) ** 2
    lm = math.sin(j_tau) ** 2
    if lp >= 1.0:
        raise FrozenDynamics("J*tau is a multiple of pi; populations frozen")
    if lp == 0.0:
        raise InstantCase("lambda_+ = 0 exactly; use the d-1 collision result")
    return lp, lm


def nstar_closed_d3_zeroT(p0: np.ndarray, j_tau: float, epsilon: float) -> float:
    """Real-valued n* from the Lambert closed form at p_A = 1, d = 3.

    Callers round up to an integer collision count.  The p3 -> 0 limit
    degrades to single-mode decay ln(eps/p2)/ln(lambda_+).
    """
    lp, lm = _lambdas(j_tau)
    p2, p3 = float(p0[1]), float(p0[2])
    log_lp = math.log(lp)
    if p3 > 0.0:
        z = log_lp * (lp * epsilon / (lm * p3)) * lp ** (lp * (p2 + p3) / (lm * p3))
        if z < _NEG_INV_E:
            raise EpsilonTooLarge(
                f"Lambert argument {z:.3e} below -1/e; epsilon too large for the closed form"
            )
        if z < 0.0:
            return -(lp / lm) * ((p2 + p3) / p3) + lambert_w(z, -1) / log_lp
        # z underflowed to zero: p3 is negligibly small, fall through
    if p2 <= 0.0:
        return 0.0
    return math.log(epsilon / p2) / log_lp


def tsim_closed_sl_zeroT(p0: np.ndarray, gamma: float, epsilon: float) -> float:
    """Simulation time from the Lambert closed form in the SL limit, p_A = 1."""
    p2, p3 = float(p0[1]), float(p0[2])
    if p3 > 0.0:
        z = -(epsilon / p3) * math.exp(-(1.0 + p2 / p3))
        if z < _NEG_INV_E:
            raise EpsilonTooLarge(
                f"epsilon exceeds the validity bound p3(0) e^(p2(0)/p3(0)) = "
                f"{p3 * math.exp(p2 / p3):.3e}"
            )
        if z < 0.0:
            return -(1.0 + p2 / p3 + lambert_w(z, -1)) / gamma
    if p2 <= 0.0:
        return 0.0
    return math.log(p2 / epsilon) / gamma


# ---------------------------------------------------------------------------
# General-dimension transcendental equations at p_A = 1
# ---------------------------------------------------------------------------


def _bracket_and_bisect(f, x0: float, epsilon: float, cap: float) -> float:
    """Find the crossing f(x) = epsilon on the decreasing tail of f."""
    lo = 0.0
    hi = x0
    while f(hi) > epsilon:
        lo = hi
        hi *= 2.0
        if hi > cap:
            raise NoRootBelowCap(f"no crossing below {cap:.3e}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) > epsilon:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def nstar_general_zeroT_solve(
    p0: np.ndarray, j_tau: float, epsilon: float, cap: float = 2.0**60
) -> float:
    """Real n* for any dimension at p_A = 1 from the binomial-sum equation.

    At lambda_+ = 0 (J*tau an odd multiple of pi/2, below float resolution
    of the formula) the populations cascade down one level per collision
    and the integer crossing is returned directly.
    """
    p0 = np.asarray(p0, dtype=float)
    d = p0.size
    lp = math.cos(j_tau) ** 2
    lm = math.sin(j_tau) ** 2
    if lp >= 1.0:
        raise FrozenDynamics("J*tau is a multiple of pi; populations frozen")
    if lp < 1e-30:
        for n in range(d):
            if p0[n + 1 :].sum() <= epsilon:
                return float(n)
        return float(d - 1)
    # S_j = sum_{k=j}^{d-2} p_{d-k+j}(0); the j-th binomial term feeds on it
    tail = [float(np.sum(p0[[d - k + j - 1 for k in range(j, d - 1)]])) for j in range(d - 1)]

    def f(n: float) -> float:
        total = 0.0
        for j, s_j in enumerate(tail):
            if s_j == 0.0:
                continue
            term = 1.0
            for i in range(j):
                term *= (n - i) * lm / (i + 1)
            total += s_j * term * lp ** (n - j)
        return total

    if f(0.0) <= epsilon:
        return 0.0
    return _bracket_and_bisect(f, 1.0, epsilon, cap)


def tsim_general_sl_zeroT_solve(
    p0: np.ndarray, gamma: float, epsilon: float, cap: float = 1e12
) -> float:
    """Simulation time for any dimension at p_A = 1 in the SL limit."""
    if gamma <= 0:
        raise ValueError("Gamma must be positive")
    p0 = np.asarray(p0, dtype=float)
    d = p0.size
    tail = [float(p0[k + 1 :].sum()) for k in range(d - 1)]

    def f(t: float) -> float:
        gt = gamma * t
        total = 0.0
        power = 1.0
        for k, q_k in enumerate(tail):
            if k > 0:
                power *= gt / k
            total += q_k * power
        return math.exp(-gt) * total

    if f(0.0) <= epsilon:
        return 0.0
    return _bracket_and_bisect(f, 1.0 / gamma, epsilon, cap / gamma)


def ceil_collisions(n_real: float) -> int:
    """Integer collision count from a real-valued closed-form n*."""
    return max(0, math.ceil(n_real - 1e-9))
