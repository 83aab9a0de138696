#!/usr/bin/env python3
"""Where is thermalization cheapest as a function of J*tau?

Sweeps the minimal collision count n* for a three-level system cooled
from the maximally mixed state toward a cold target.  The count diverges
at J*tau -> 0 and pi (frozen dynamics) and is minimal at pi/2, where at
zero temperature the system lands on the target in exactly d-1
collisions.  The zero-temperature Lambert closed form tracks the
simulated staircase.
"""

import math

import numpy as np

from ri_thermalizer import (
    CollisionConfig,
    ceil_collisions,
    evolve,
    flip_flop_model,
    nstar_closed_d3_zeroT,
    nstar_simulated,
)

BETA = 10.0
EPS = 1e-4

print("n* from the maximally mixed state, beta = 10, epsilon = 1e-4")
print(" J*tau    simulated   zero-T closed form (ceil)")
grid = np.linspace(0.2, math.pi - 0.2, 13)
p0 = np.full(3, 1 / 3)
for j_tau in grid:
    model = flip_flop_model(3, omega=1.0, beta=BETA, j=1e-3)
    cfg = CollisionConfig(tau=j_tau / 1e-3, n_max=500_000, epsilon=EPS)
    sim = nstar_simulated(np.eye(3, dtype=complex) / 3, model, cfg)
    closed = ceil_collisions(nstar_closed_d3_zeroT(p0, float(j_tau), EPS))
    marker = "  <-- pi/2 region" if abs(j_tau - math.pi / 2) < 0.15 else ""
    print(f"{j_tau:7.4f}   {sim.n_star:9d}   {closed:9d}{marker}")

print("\nExact d-1 collision cooling at J*tau = pi/2, zero temperature:")
for d in (2, 3, 5, 8, 10):
    model = flip_flop_model(d, omega=1.0, beta=math.inf, j=1.0)
    cfg = CollisionConfig(tau=math.pi / 2, n_max=20, epsilon=EPS)
    ground = np.zeros((d, d), dtype=complex)
    ground[0, 0] = 1.0
    rec = evolve(np.eye(d, dtype=complex) / d, model, cfg, d - 1, target=ground)
    print(f"  d = {d:2d}: distance after d-2 collisions {rec.distances[d - 2]:.3f}, "
          f"after d-1 collisions {rec.distances[d - 1]:.2e}")
