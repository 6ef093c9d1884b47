#!/usr/bin/env python3
"""Earth-scale numbers: ground station vs low-orbit satellite.

At Earth scale the redshift factors differ from 1 by about a part in 1e9 and
from each other by ~4e-11, far too small to change a decoherence curve
visibly, but exactly the regime where naive floating-point subtraction of
the two factors loses everything.  The script prints the physically
meaningful numbers (stable difference, accumulated clock phase) and then
runs the same scenario through the command-line interface.
"""

import json
import math
import tempfile
from pathlib import Path

from gravbell import (
    GravitationalScenario,
    redshift_difference,
    redshift_factor,
    schwarzschild_radius,
)
from gravbell.cli import main

M_EARTH = 5.972e24
R_GROUND = 6.371e6          # sea level
R_ORBIT = 6.771e6           # ~400 km altitude

print(f"Schwarzschild radius of Earth: {schwarzschild_radius(M_EARTH) * 1e3:.3f} mm")
alpha = redshift_factor(M_EARTH, R_GROUND)
beta = redshift_factor(M_EARTH, R_ORBIT)
print(f"alpha (ground): 1 - {1 - alpha:.6e}")
print(f"beta  (orbit):  1 - {1 - beta:.6e}")

naive = alpha - beta
stable = redshift_difference(M_EARTH, R_GROUND, R_ORBIT)
print(f"alpha - beta, naive subtraction: {naive:.6e}")
print(f"alpha - beta, stable form:       {stable:.6e}")
print(f"relative disagreement of the naive path: "
      f"{abs(naive - stable) / abs(stable):.2e}")

# accumulated clock phase for an optical transition over one day
scenario = GravitationalScenario(M_EARTH, R_GROUND, R_ORBIT, omega=2 * math.pi * 4e14)
day = 86400.0
print(f"clock phase drift over one day at 400 THz: "
      f"{scenario.phase_shift(day):.3e} rad "
      f"({scenario.phase_shift(day) / (2 * math.pi):.1f} cycles)")

# the same scenario as a CLI run (gravitational asymmetry enters the rates)
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "earth_run.csv"
    config = {
        "spacetime": {"mass_kg": M_EARTH, "r_a_m": R_GROUND, "r_b_m": R_ORBIT},
        "channel": {"kind": "phase_damping", "gamma": 1.0},
        "integrator": {"method": "rk4", "step": 1e-3, "t_max": 2.0,
                       "sample_every": 0.05},
        "outputs": {"path": str(out), "format": "csv",
                    "include_oracle": True, "include_state": True},
    }
    config_path = Path(tmp) / "earth.json"
    config_path.write_text(json.dumps(config, indent=2))
    code = main(["run", str(config_path)])
    print(f"CLI exit code: {code}")
    lines = out.read_text().splitlines()
    header = lines[0].split(",")
    last = lines[-1].split(",")
    print("final sample:",
          {k: last[header.index(k)] for k in
           ("t", "gamma_a", "gamma_b", "concurrence", "oracle_dev")})
