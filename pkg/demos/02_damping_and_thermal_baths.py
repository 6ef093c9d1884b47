#!/usr/bin/env python3
"""Amplitude damping and thermal (generalized amplitude damping) baths.

First the doubly excited state |11> decays under independent amplitude
damping: its population follows e^{-(gamma_a + gamma_b) t}.  Then each qubit
couples to its own thermal bath (different occupation numbers n_th), and the
excited populations relax to the detailed-balance values n/(2n+1).
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from gravbell import (
    DensityMatrix,
    IntegratorConfig,
    RedshiftPair,
    amplitude_damping_rhs,
    bell_state,
    effective_rates,
    evolve,
    gad_rhs,
    gad_steady_state_single,
    pop_excited,
)

# --- amplitude damping of |11><11| --------------------------------------
rho11 = np.zeros((4, 4), dtype=complex)
rho11[3, 3] = 1.0

rates = effective_rates(1.0, RedshiftPair(1.0, 0.8))
config = IntegratorConfig(method="rk4", step=1e-3, t_max=4.0, sample_every=0.05)
ad_traj = evolve(DensityMatrix(rho11),
                 lambda t, m: amplitude_damping_rhs(m, rates), config)
p11 = np.array([np.asarray(s)[3, 3].real for s in ad_traj.states])
expected = np.exp(-(rates.gamma_a + rates.gamma_b) * ad_traj.times)
print("amplitude damping: max |p11 - exp(-(ga+gb) t)| =",
      f"{np.abs(p11 - expected).max():.3e}")

# --- thermal baths with different occupations ----------------------------
n_a, n_b = 1.0, 0.2
rates = effective_rates(1.0, RedshiftPair(1.0, 1.0))
config = IntegratorConfig(method="rk4", step=2e-3, t_max=12.0, sample_every=0.05)
traj = evolve(bell_state(), lambda t, m: gad_rhs(m, rates, n_a, n_b), config)

pa = np.array([pop_excited(s, "a") for s in traj.states])
pb = np.array([pop_excited(s, "b") for s in traj.states])
target_a = gad_steady_state_single(n_a)[1, 1].real
target_b = gad_steady_state_single(n_b)[1, 1].real
print(f"thermal bath A (n_th={n_a}): final population {pa[-1]:.6f}, "
      f"detailed balance {target_a:.6f}")
print(f"thermal bath B (n_th={n_b}): final population {pb[-1]:.6f}, "
      f"detailed balance {target_b:.6f}")
assert abs(pa[-1] - target_a) < 1e-4 and abs(pb[-1] - target_b) < 1e-4

fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
left.plot(ad_traj.times, p11, label="|11> population")
left.plot(ad_traj.times, expected, "k:", lw=0.8, label="closed form")
left.set_title("amplitude damping")
left.set_xlabel("t")
left.legend()
right.plot(traj.times, pa, label=f"qubit A (n_th={n_a})")
right.plot(traj.times, pb, label=f"qubit B (n_th={n_b})")
right.axhline(target_a, color="C0", ls=":", lw=1)
right.axhline(target_b, color="C1", ls=":", lw=1)
right.set_title("relaxation to per-qubit thermal occupations")
right.set_xlabel("t")
right.legend()
fig.tight_layout()
fig.savefig("demo_damping_thermal.png", dpi=150)
print("wrote demo_damping_thermal.png")
