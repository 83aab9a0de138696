#!/usr/bin/env python3
"""Zero-temperature cooling cost in closed form.

With fully polarized ancillas the population recursion solves exactly,
and the cost of reaching the ground state within epsilon reduces to the
lower Lambert-W branch for three levels, or to a short transcendental
solve for any dimension.  Both are checked here against direct
simulation, and the precision scaling T_sim ~ log(1/epsilon) is shown.
"""

import math

import numpy as np

from ri_thermalizer import (
    CollisionConfig,
    ceil_collisions,
    flip_flop_model,
    lambert_w,
    nstar_closed_d3_zeroT,
    nstar_general_zeroT_solve,
    nstar_simulated,
    tsim_closed_sl_zeroT,
    tsim_general_sl_zeroT_solve,
    tsim_simulated_sl,
)

p0 = np.full(3, 1 / 3)

print("Lambert-W branches: W0 and W-1 meet at (-1/e, -1)")
for z in (-math.exp(-1.0), -0.2, -0.05):
    print(f"  z = {z:8.5f}: W0 = {lambert_w(z, 0):9.5f}   W-1 = {lambert_w(z, -1):9.5f}")

print("\nthree levels, maximally mixed start, epsilon = 1e-4:")
print(" J*tau     closed-form n*   ceil   simulated")
for j_tau in (math.pi / 8, math.pi / 4, 3 * math.pi / 8):
    n_real = nstar_closed_d3_zeroT(p0, j_tau, 1e-4)
    model = flip_flop_model(3, omega=1.0, beta=math.inf, j=1e-3)
    cfg = CollisionConfig(tau=j_tau / 1e-3, n_max=10**6, epsilon=1e-4)
    sim = nstar_simulated(np.eye(3, dtype=complex) / 3, model, cfg).n_star
    print(f"{j_tau:7.4f}   {n_real:14.4f}   {ceil_collisions(n_real):4d}   {sim:9d}")

print("\nSL limit, Gamma = 1: closed form vs integrated crossing time")
for eps in (1e-3, 1e-4, 1e-6, 1e-8):
    closed = tsim_closed_sl_zeroT(p0, 1.0, eps)
    sim = tsim_simulated_sl(p0, 1.0, 1.0, eps, t_max=200.0).t_sim
    print(f"  epsilon {eps:7.1e}: closed {closed:9.5f}   simulated {sim:9.5f}")

print("\nhigher dimensions (maximally mixed, epsilon = 1e-4):")
print("  d    n*(J*tau = 0.9)   n*(J*tau = pi/2)   T_sim (Gamma = 1)")
for d in (3, 4, 5, 8, 10):
    p = np.full(d, 1 / d)
    n_gen = nstar_general_zeroT_solve(p, 0.9, 1e-4)
    n_opt = nstar_general_zeroT_solve(p, math.pi / 2, 1e-4)
    t_gen = tsim_general_sl_zeroT_solve(p, 1.0, 1e-4)
    print(f"  {d:2d}   {n_gen:15.3f}   {n_opt:16.0f}   {t_gen:10.4f}")
