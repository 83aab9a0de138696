"""Model builders: Hamiltonians, thermal states, and interaction variants.

Conventions.  The system has d equidistant levels with energies
omega*(k - s), k = 0..d-1 and s = (d-1)/2, so index 0 is the ground
state.  The ancilla is a qubit whose ground state comes first:
H_A = diag(-omega/2, +omega/2) and rho_A = diag(p_A, 1-p_A) with
p_A = 1/(1 + exp(-beta*omega)).  Zero temperature is the explicit
sentinel beta = math.inf, which maps to p_A = 1 exactly.

Joint-space indices are system-major: |k>_S |j>_A sits at 2*k + j.
The flip-flop interaction couples |k+1, down> with |k, up>, i.e. joint
indices 2k+2 and 2k+1, which reproduces the 6x6 three-level collision
Hamiltonian used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .linalg import kron


@dataclass(frozen=True)
class SystemSpec:
    """d-level system with splitting omega (d = 2s+1, energies omega*(k-s))."""

    d: int
    omega: float = 1.0

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("system needs at least two levels")
        if self.omega <= 0:
            raise ValueError("omega must be positive")

    @property
    def spin(self) -> float:
        return (self.d - 1) / 2


@dataclass(frozen=True)
class AncillaSpec:
    """Qubit ancilla at inverse temperature beta (math.inf = zero temperature)."""

    omega: float
    beta: float

    def __post_init__(self):
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if self.beta < 0:
            raise ValueError("beta must be >= 0 (use math.inf for zero temperature)")

    @property
    def ground_population(self) -> float:
        # exp(-inf) == 0.0, so beta = inf yields exactly 1.0
        return 1.0 / (1.0 + math.exp(-self.beta * self.omega))


@dataclass(frozen=True)
class IsotropicFlipFlop:
    """Energy-conserving nearest-level flip-flop with a single coupling J."""

    j: float

    def __post_init__(self):
        if self.j < 0:
            raise ValueError("J must be >= 0")


@dataclass(frozen=True)
class CounterRotating:
    """Flip-flop plus the non-conserving |k+1,up><k,down| term with strength J'."""

    j: float
    j_prime: float

    def __post_init__(self):
        if self.j < 0 or self.j_prime < 0:
            raise ValueError("couplings must be >= 0")


@dataclass(frozen=True)
class RandomFull:
    """All joint-space off-diagonal couplings drawn fresh from U(lo, hi).

    Draws are re-derived per collision from (seed, collision index), so a
    given seed reproduces the whole coupling sequence bitwise.
    """

    lo: float
    hi: float
    seed: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")


Interaction = Union[IsotropicFlipFlop, CounterRotating, RandomFull]


@dataclass(frozen=True)
class ModelSpec:
    """System + ancilla + interaction bundle driving one collision stream."""

    system: SystemSpec
    ancilla: AncillaSpec
    interaction: Interaction


def flip_flop_model(d: int, omega: float, beta: float, j: float) -> ModelSpec:
    """Resonant energy-conserving model, the paper's default configuration."""
    return ModelSpec(
        system=SystemSpec(d=d, omega=omega),
        ancilla=AncillaSpec(omega=omega, beta=beta),
        interaction=IsotropicFlipFlop(j=j),
    )


def system_hamiltonian(spec: SystemSpec) -> np.ndarray:
    """Diagonal d x d Hamiltonian with entries omega*(k - s)."""
    energies = spec.omega * (np.arange(spec.d) - spec.spin)
    return np.diag(energies.astype(complex))


def ancilla_hamiltonian(spec: AncillaSpec) -> np.ndarray:
    """Qubit Hamiltonian diag(-omega/2, +omega/2), ground state first."""
    return np.diag(np.array([-spec.omega / 2, spec.omega / 2], dtype=complex))


def ancilla_thermal_state(spec: AncillaSpec) -> np.ndarray:
    """Gibbs state diag(p_A, 1 - p_A) of the ancilla qubit."""
    p_a = spec.ground_population
    return np.diag(np.array([p_a, 1.0 - p_a], dtype=complex))


def system_gibbs_state(spec: SystemSpec, beta: float) -> np.ndarray:
    """Canonical thermal state of the system at inverse temperature beta."""
    return np.diag(gibbs_populations(spec.d, spec.omega, beta).astype(complex))


def gibbs_populations(d: int, omega: float, beta: float) -> np.ndarray:
    """Thermal populations exp(-beta E_k)/Z as a real vector."""
    if math.isinf(beta):
        p = np.zeros(d)
        p[0] = 1.0
        return p
    energies = omega * (np.arange(d) - (d - 1) / 2)
    weights = np.exp(-beta * (energies - energies[0]))
    return weights / weights.sum()


def _flip_flop_pairs(d: int):
    # |k+1, down> <-> |k, up>: joint indices (2k+2, 2k+1)
    return [(2 * k + 2, 2 * k + 1) for k in range(d - 1)]


def _counter_rotating_pairs(d: int):
    # |k+1, up> <-> |k, down>: joint indices (2k+3, 2k)
    return [(2 * k + 3, 2 * k) for k in range(d - 1)]


def interaction_hamiltonian(
    sys: SystemSpec, ispec: Interaction, collision: int = 0
) -> np.ndarray:
    """Interaction Hamiltonian on the 2d-dimensional joint space.

    For RandomFull the couplings are drawn from the generator keyed by
    (seed, collision), one draw per strict upper-triangle entry in
    row-major order.
    """
    dim = 2 * sys.d
    h_i = np.zeros((dim, dim), dtype=complex)
    if isinstance(ispec, IsotropicFlipFlop):
        for i, j in _flip_flop_pairs(sys.d):
            h_i[i, j] = h_i[j, i] = ispec.j
    elif isinstance(ispec, CounterRotating):
        for i, j in _flip_flop_pairs(sys.d):
            h_i[i, j] = h_i[j, i] = ispec.j
        for i, j in _counter_rotating_pairs(sys.d):
            h_i[i, j] = h_i[j, i] = ispec.j_prime
    elif isinstance(ispec, RandomFull):
        rng = np.random.default_rng([ispec.seed, collision])
        rows, cols = np.triu_indices(dim, k=1)
        couplings = rng.uniform(ispec.lo, ispec.hi, size=rows.size)
        h_i[rows, cols] = couplings
        h_i[cols, rows] = couplings
    else:
        raise TypeError(f"unknown interaction spec {type(ispec).__name__}")
    return h_i


def bare_hamiltonian(sys: SystemSpec, anc: AncillaSpec) -> np.ndarray:
    """Non-interacting part H_S (x) I_A + I_S (x) H_A."""
    eye_s = np.eye(sys.d, dtype=complex)
    eye_a = np.eye(2, dtype=complex)
    return kron(system_hamiltonian(sys), eye_a) + kron(eye_s, ancilla_hamiltonian(anc))


def total_hamiltonian(
    sys: SystemSpec, anc: AncillaSpec, ispec: Interaction, collision: int = 0
) -> np.ndarray:
    """Full collision Hamiltonian H_0 + H_I on the joint space."""
    return bare_hamiltonian(sys, anc) + interaction_hamiltonian(sys, ispec, collision)


def random_density_matrix(d: int, rng: np.random.Generator) -> np.ndarray:
    """Random full-rank density matrix (Ginibre construction).

    Convention for "random initial state" runs; the underlying ensemble is
    not pinned by the physics.
    """
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real
