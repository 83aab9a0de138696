#!/usr/bin/env python3
"""Collision-by-collision relaxation of a three-level system.

A random initial state collides with a stream of thermal qubits in the
two complementary regimes: long weak collisions (J*tau of order one) and
the stroboscopic-Lindblad regime (short strong collisions with
Gamma = J^2 tau fixed).  Populations head to the Gibbs state and
coherences decay, with |c12| transiently overshooting because it feeds
on the decaying c23.
"""

import numpy as np

from ri_thermalizer import (
    CollisionConfig,
    evolve,
    flip_flop_model,
    random_density_matrix,
    system_gibbs_state,
    trace_distance,
)

BETA = 1.0
D = 3

rng = np.random.default_rng(7)
rho0 = random_density_matrix(D, rng)

regimes = {
    "J*tau ~ 1  (J = 1e-3, tau = 1e3)": dict(j=1e-3, tau=1e3, n=60),
    "SL limit   (J = 10,   tau = 1e-2)": dict(j=10.0, tau=1e-2, n=600),
}

for label, params in regimes.items():
    model = flip_flop_model(D, omega=1.0, beta=BETA, j=params["j"])
    cfg = CollisionConfig(tau=params["tau"], n_max=params["n"], epsilon=1e-4)
    record = evolve(rho0, model, cfg, params["n"])
    gibbs = system_gibbs_state(model.system, BETA)

    print(f"\n=== {label} ===")
    print(f"target ground population p1* = {gibbs[0, 0].real:.6f}")
    print(" n     p1        |c12|     |c13|     |c23|     D(rho, Gibbs)")
    stride = max(1, params["n"] // 12)
    for n in range(0, params["n"] + 1, stride):
        rho = record.states[n]
        print(
            f"{n:4d}  {rho[0, 0].real:.6f}  {abs(rho[0, 1]):.6f}  "
            f"{abs(rho[0, 2]):.6f}  {abs(rho[1, 2]):.6f}  {record.distances[n]:.2e}"
        )

    c12_path = np.array([abs(state[0, 1]) for state in record.states])
    n_peak = int(np.argmax(c12_path))
    if c12_path[n_peak] > c12_path[0]:
        print(f"|c12| peaks at collision {n_peak}: {c12_path[n_peak]:.6f} "
              f"(started at {c12_path[0]:.6f})")

print("\nFixed point check: one collision applied to the Gibbs state moves it by")
model = flip_flop_model(D, omega=1.0, beta=BETA, j=0.7)
cfg = CollisionConfig(tau=1.3, n_max=1, epsilon=1e-4)
gibbs = system_gibbs_state(model.system, BETA)
moved = evolve(gibbs, model, cfg, 1).states[-1]
print(f"  trace distance {trace_distance(moved, gibbs):.2e}")
