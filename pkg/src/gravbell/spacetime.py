"""Gravitational redshift for static observers around a spherical mass.

Everything downstream depends only on the dimensionless factors (alpha, beta),
so this module is the single place where SI inputs are converted.  At
satellite scales 2GM/(r c^2) is ~1e-9 and the difference alpha - beta is lost
to cancellation if computed naively; `redshift_difference` provides the stable
evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import C_LIGHT, G


def schwarzschild_radius(mass: float) -> float:
    """Horizon radius 2GM/c^2 in metres for a central mass in kg."""
    if mass < 0:
        raise ValueError(f"mass must be non-negative, got {mass}")
    return 2.0 * G * mass / (C_LIGHT * C_LIGHT)


def redshift_factor(mass: float, r: float) -> float:
    """sqrt(1 - 2GM/(r c^2)) for a static observer at radial coordinate r.

    Strictly increasing in r, tends to 1 as r -> infinity, and equals 1
    exactly in flat spacetime (mass = 0).
    """
    r_s = schwarzschild_radius(mass)
    if r <= r_s:
        raise ValueError(
            f"observer at r={r} m is at or inside the horizon (r_s={r_s} m)"
        )
    return math.sqrt(1.0 - r_s / r)


def redshift_difference(mass: float, r_a: float, r_b: float) -> float:
    """alpha - beta without catastrophic cancellation.

    Uses (alpha^2 - beta^2)/(alpha + beta); the numerator reduces to
    r_s (r_a - r_b)/(r_a r_b), which keeps full precision even when both
    factors differ from 1 by ~1e-9.
    """
    alpha = redshift_factor(mass, r_a)
    beta = redshift_factor(mass, r_b)
    r_s = schwarzschild_radius(mass)
    return r_s * (r_a - r_b) / (r_a * r_b) / (alpha + beta)


def proper_time(alpha: float, t: float) -> float:
    """Proper time alpha * t elapsed for an observer with redshift factor alpha."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return alpha * t


def phase_shift(omega: float, alpha: float, beta: float, t: float) -> float:
    """Relative phase omega * (alpha - beta) * t accumulated between two clocks.

    Antisymmetric under exchange of alpha and beta.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return omega * (alpha - beta) * t


@dataclass(frozen=True)
class GravitationalScenario:
    """Static qubit pair at radii r_a, r_b around a central mass.

    omega is the proper transition (clock) angular frequency in rad/s.
    """

    mass: float
    r_a: float
    r_b: float
    omega: float = 0.0

    def __post_init__(self) -> None:
        if self.mass < 0:
            raise ValueError(f"mass must be non-negative, got {self.mass}")
        if self.omega < 0:
            raise ValueError(f"omega must be non-negative, got {self.omega}")
        r_s = schwarzschild_radius(self.mass)
        for name, r in (("r_a", self.r_a), ("r_b", self.r_b)):
            if r <= r_s:
                raise ValueError(
                    f"{name}={r} m is at or inside the horizon (r_s={r_s} m)"
                )

    def redshift_pair(self) -> "RedshiftPair":
        return RedshiftPair(
            redshift_factor(self.mass, self.r_a),
            redshift_factor(self.mass, self.r_b),
        )

    def phase_shift(self, t: float) -> float:
        """omega (alpha - beta) t via the cancellation-safe difference."""
        if t < 0:
            raise ValueError(f"t must be non-negative, got {t}")
        return self.omega * redshift_difference(self.mass, self.r_a, self.r_b) * t


@dataclass(frozen=True)
class RedshiftPair:
    """Dimensionless per-qubit time-dilation factors, each in (0, 1]."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {value}")

    @classmethod
    def from_scenario(cls, scenario: GravitationalScenario) -> "RedshiftPair":
        return scenario.redshift_pair()
