"""Physical constants, CODATA 2018 / SI exact values."""

G = 6.67430e-11         # gravitational constant, m^3 kg^-1 s^-2
C_LIGHT = 299792458.0   # speed of light, m/s (exact)
HBAR = 1.054571817e-34  # reduced Planck constant, J s
K_B = 1.380649e-23      # Boltzmann constant, J/K (exact)
