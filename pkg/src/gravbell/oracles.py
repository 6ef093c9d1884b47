"""Closed-form reference solutions used as ground truth.

These share no evolution code with the integrator; they build matrices
directly from the analytic expressions so that simulator/oracle agreement is
a meaningful cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import DensityMatrix


@dataclass(frozen=True)
class DephasingOracle:
    """Markovian dephasing of the Bell pair at redshift-scaled rates."""

    gamma: float
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {value}")

    def coherence(self, t: float) -> float:
        """The (1,4) matrix entry: 0.5 exp(-2 gamma (alpha + beta) t)."""
        if t < 0:
            raise ValueError(f"t must be non-negative, got {t}")
        return 0.5 * math.exp(-2.0 * self.gamma * (self.alpha + self.beta) * t)


def dephased_bell_state(oracle: DephasingOracle, t: float) -> DensityMatrix:
    """Bell state after dephasing for time t: populations pinned at 1/2,
    corner coherences decayed exponentially."""
    c = oracle.coherence(t)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = 0.5
    m[0, 3] = m[3, 0] = c
    return DensityMatrix(m)


def coherence_halflife(oracle: DephasingOracle) -> float:
    """Time at which the corner coherence halves: ln 2 / (2 gamma (alpha+beta))."""
    rate = oracle.gamma * (oracle.alpha + oracle.beta)
    if rate == 0:
        raise ValueError("half-life undefined for gamma (alpha + beta) = 0")
    return math.log(2.0) / (2.0 * rate)


def gad_steady_state_single(n_th: float) -> np.ndarray:
    """Thermal fixed point of single-qubit generalized amplitude damping.

    Detailed balance gamma (n+1) p1 = gamma n p0 gives
    p1 = n/(2n+1), p0 = (n+1)/(2n+1).
    """
    if n_th < 0:
        raise ValueError(f"n_th must be non-negative, got {n_th}")
    denom = 2.0 * n_th + 1.0
    return np.diag([(n_th + 1.0) / denom, n_th / denom]).astype(complex)
