"""Time-dependent decay rate of a qubit coupled to a Lorentzian reservoir
(damped Jaynes-Cummings model) and its gravitational scaling.

The rate is

    gamma_tilde(t) = 2 lambda gamma0 sinh(d t/2)
                     / [ (d/2) cosh(d t/2) + lambda sinh(d t/2) ],
    d = sqrt(lambda^2 - 2 lambda gamma0),

with three regimes: monotonic decay for lambda > 2 gamma0, a critical limit
2 lambda gamma0 t / (1 + lambda t) at lambda = 2 gamma0, and an oscillatory
branch for lambda < 2 gamma0 where d is imaginary and the hyperbolic
functions become trigonometric.  On the oscillatory branch the denominator
has zeros (first at tan(delta t/2) = -delta/(2 lambda)); the rate has a
simple, non-integrable pole there and evaluation within 1e-12 of a zero
raises PoleError.  Callers must not integrate across a pole: the dynamics
beyond it is undefined in this time-local description.

Two coefficient conventions exist for the cosh term in the denominator: the
default variant ("paper") carries d/2 as written above, the widely used
alternative ("literature") carries d.  They differ even in the Markovian
limit (lambda >> gamma0), plateauing at 4 gamma0/3 and gamma0 respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import EffectiveRates, dephasing_rhs
from .spacetime import RedshiftPair

VARIANTS = ("paper", "literature")

# Coefficient multiplying (d/2) cosh in the denominator: 1 -> d/2, 2 -> d.
_VARIANT_COEFF = {"paper": 1.0, "literature": 2.0}

MONOTONIC = "monotonic"
OSCILLATORY = "oscillatory"
CRITICAL = "critical"

# Relative width of the critical band around lambda = 2 gamma0, and the
# |d| * t threshold below which the series form is used to avoid 0/0.
_CRITICAL_BAND = 1e-12
_SERIES_DT = 1e-6


class PoleError(ArithmeticError):
    """Evaluation at, or integration across, a pole of the time-local rate."""

    def __init__(self, message: str, t: float | None = None) -> None:
        super().__init__(message)
        self.t = t


@dataclass(frozen=True)
class KernelParams:
    """gamma0 is the flat-spectrum (Markovian) rate, lam the reservoir width."""

    gamma0: float
    lam: float

    def __post_init__(self) -> None:
        if self.gamma0 <= 0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")
        if self.lam <= 0:
            raise ValueError(f"lambda must be positive, got {self.lam}")


@dataclass(frozen=True)
class KernelRegime:
    """Regime tag plus d = sqrt(lam^2 - 2 lam gamma0) (monotonic branch) or
    delta = sqrt(2 lam gamma0 - lam^2) (oscillatory branch); 0 when critical."""

    kind: str
    d_value: float


def classify(params: KernelParams) -> KernelRegime:
    lam, g0 = params.lam, params.gamma0
    if abs(lam - 2.0 * g0) <= _CRITICAL_BAND * max(lam, 2.0 * g0):
        return KernelRegime(CRITICAL, 0.0)
    if lam > 2.0 * g0:
        return KernelRegime(MONOTONIC, math.sqrt(lam * lam - 2.0 * lam * g0))
    return KernelRegime(OSCILLATORY, math.sqrt(2.0 * lam * g0 - lam * lam))


def _check_variant(variant: str) -> float:
    try:
        return _VARIANT_COEFF[variant]
    except KeyError:
        raise ValueError(
            f"unknown kernel variant {variant!r}; expected one of {VARIANTS}"
        ) from None


def gamma_tilde(params: KernelParams, t: float, variant: str = "paper") -> float:
    """The time-dependent decay rate; negative values signal backflow."""
    coeff = _check_variant(variant)
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    lam, g0 = params.lam, params.gamma0
    regime = classify(params)

    if regime.kind == CRITICAL or regime.d_value * t < _SERIES_DT:
        # Series in u = d t / 2 (u^2 is signed); exact at the critical point,
        # and avoids 0/0 when |d| t is tiny on either side of it.
        u2 = 0.25 * lam * (lam - 2.0 * g0) * t * t
        s = 1.0 + u2 / 6.0
        c = 1.0 + u2 / 2.0
        return 2.0 * lam * g0 * t * s / (coeff * c + lam * t * s)

    if regime.kind == MONOTONIC:
        # tanh form of the printed expression; safe for large d t.
        th = math.tanh(0.5 * regime.d_value * t)
        return 2.0 * lam * g0 * th / (coeff * 0.5 * regime.d_value + lam * th)

    delta = regime.d_value
    v = 0.5 * delta * t
    den = coeff * 0.5 * delta * math.cos(v) + lam * math.sin(v)
    if abs(den) < 1e-12 * (coeff * 0.5 * delta + lam):
        raise PoleError(f"time-local rate has a pole at t ~ {t}", t=t)
    return 2.0 * lam * g0 * math.sin(v) / den


def first_pole_time(params: KernelParams, variant: str = "paper") -> float | None:
    """First denominator zero on the oscillatory branch; None otherwise."""
    coeff = _check_variant(variant)
    regime = classify(params)
    if regime.kind != OSCILLATORY:
        return None
    delta = regime.d_value
    v_star = math.pi - math.atan(coeff * 0.5 * delta / params.lam)
    return 2.0 * v_star / delta


def scaled_rates(
    params: KernelParams,
    redshift: RedshiftPair,
    t: float,
    variant: str = "paper",
    dilate_argument: bool = False,
) -> EffectiveRates:
    """(alpha gamma_tilde(t), beta gamma_tilde(t)).

    With dilate_argument=True the kernel is evaluated at each qubit's proper
    time instead: (alpha gamma_tilde(alpha t), beta gamma_tilde(beta t)).
    That is an exploratory option; the baseline model scales amplitudes only.
    """
    if dilate_argument:
        return EffectiveRates(
            redshift.alpha * gamma_tilde(params, redshift.alpha * t, variant),
            redshift.beta * gamma_tilde(params, redshift.beta * t, variant),
        )
    g = gamma_tilde(params, t, variant)
    return EffectiveRates(redshift.alpha * g, redshift.beta * g)


def nonmarkov_dephasing_rhs(
    rho,
    params: KernelParams,
    redshift: RedshiftPair,
    t: float,
    variant: str = "paper",
    dilate_argument: bool = False,
) -> np.ndarray:
    """Dephasing generator with the instantaneous kernel rates."""
    return dephasing_rhs(
        rho, scaled_rates(params, redshift, t, variant, dilate_argument)
    )


def _adaptive_simpson(f, a: float, b: float, tol: float, depth: int) -> float:
    fa, fm, fb = f(a), f(0.5 * (a + b)), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_refine(f, a, b, fa, fm, fb, whole, tol, depth)


def _simpson_refine(f, a, b, fa, fm, fb, whole, tol, depth) -> float:
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 0:
        raise PoleError(
            f"quadrature did not converge on [{a}, {b}]; "
            "non-integrable feature suspected"
        )
    return (_simpson_refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + _simpson_refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1))


def decoherence_integral(
    params: KernelParams,
    redshift: RedshiftPair,
    t: float,
    quadrature_step: float | None = None,
    variant: str = "paper",
    dilate_argument: bool = False,
    abs_tol: float = 1e-10,
) -> float:
    """Accumulated decoherence Gamma(t) = integral of (gamma_a + gamma_b).

    For a constant rate gamma this reduces to gamma (alpha + beta) t.  Uses
    adaptive Simpson quadrature (absolute tolerance `abs_tol`, at most 2^20
    subintervals); `quadrature_step` optionally sets the initial panel width.
    Raises PoleError when [0, t] contains a rate pole: the pole is simple and
    therefore not integrable.
    """
    _check_variant(variant)
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if quadrature_step is not None and quadrature_step <= 0:
        raise ValueError(
            f"quadrature_step must be positive, got {quadrature_step}"
        )
    if t == 0:
        return 0.0

    pole = first_pole_time(params, variant)
    reach = max(redshift.alpha, redshift.beta) * t if dilate_argument else t
    if pole is not None and reach >= pole:
        raise PoleError(
            f"rate pole at t ~ {pole} lies inside the integration window",
            t=pole,
        )

    def integral_to(upper: float) -> float:
        if upper == 0.0:
            return 0.0
        if quadrature_step is None:
            panels = np.array([0.0, upper])
        else:
            n = max(1, math.ceil(upper / quadrature_step))
            panels = np.linspace(0.0, upper, n + 1)
        per_panel_tol = abs_tol / (len(panels) - 1)
        # depth 20 caps the total refinement at 2^20 subintervals
        return sum(
            _adaptive_simpson(
                lambda u: gamma_tilde(params, u, variant),
                panels[i], panels[i + 1], per_panel_tol, 20,
            )
            for i in range(len(panels) - 1)
        )

    if dilate_argument:
        return integral_to(redshift.alpha * t) + integral_to(redshift.beta * t)
    return (redshift.alpha + redshift.beta) * integral_to(t)
