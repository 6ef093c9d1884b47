"""Density-matrix time stepping with physicality diagnostics.

Two integrators are provided: a fixed-step classical RK4 (deterministic,
used wherever results are compared against closed forms) and an embedded
Dormand-Prince RK45 with adaptive step control for rapidly varying rates.
Time-dependent generators are evaluated at the RK substage times, never
frozen per step.  After every internal step the state is re-hermitized via
(rho + rho^dag)/2; the trace is deliberately *not* renormalized, so trace
drift remains visible as a diagnostic.

A PoleError raised by the generator ends the trajectory at the last
completed sample with status "pole" instead of propagating: partial
trajectories are data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .memory_kernel import PoleError
from .states import DensityMatrix

RK4_FIXED = "rk4"
RK45_ADAPTIVE = "rk45"

STATUS_OK = "ok"
STATUS_POLE = "pole"
STATUS_UNDERFLOW = "step_underflow"
STATUS_INVARIANT = "invariant_violation"


class StepUnderflowError(RuntimeError):
    """Adaptive step fell below the resolvable size without meeting tolerance."""


@dataclass(frozen=True)
class IntegratorConfig:
    method: str = RK4_FIXED
    step: float = 1e-3
    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    t_max: float = 5.0
    sample_every: float = 1e-2
    hermitize: bool = True

    def __post_init__(self) -> None:
        if self.method not in (RK4_FIXED, RK45_ADAPTIVE):
            raise ValueError(f"unknown method {self.method!r}")
        if self.step <= 0:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.t_max <= 0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.sample_every < self.step:
            raise ValueError(
                f"sample_every ({self.sample_every}) must be >= step ({self.step})"
            )
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")


@dataclass
class Trajectory:
    """Sampled states plus per-sample diagnostics.

    `hermiticity_residual` is the largest |rho - rho^dag| entry produced by
    the integrator within each sampling interval, measured before repair;
    stored states themselves are exactly Hermitian.
    """

    times: np.ndarray
    states: list[DensityMatrix]
    rates_a: np.ndarray
    rates_b: np.ndarray
    trace_error: np.ndarray
    min_eigenvalue: np.ndarray
    hermiticity_residual: np.ndarray
    status: str = STATUS_OK
    status_detail: str = ""

    def state_matrices(self) -> np.ndarray:
        return np.stack([np.asarray(s) for s in self.states])


def _substeps(sample_every: float, step: float) -> int:
    ratio = sample_every / step
    nearest = round(ratio)
    if nearest >= 1 and abs(ratio - nearest) <= 1e-9 * ratio:
        return int(nearest)
    return max(1, math.ceil(ratio))


def _rk4_interval(m, t0, length, n_sub, generator, hermitize):
    h = length / n_sub
    worst = 0.0
    for j in range(n_sub):
        t = t0 + j * h
        k1 = generator(t, m)
        k2 = generator(t + 0.5 * h, m + (0.5 * h) * k1)
        k3 = generator(t + 0.5 * h, m + (0.5 * h) * k2)
        k4 = generator(t + h, m + h * k3)
        m = m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        res = float(np.abs(m - m.conj().T).max())
        if res > worst:
            worst = res
        if hermitize:
            m = 0.5 * (m + m.conj().T)
    return m, worst


# Dormand-Prince 5(4) tableau.
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_DP_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640,
          -92097 / 339200, 187 / 2100, 1 / 40)


def _rk45_interval(m, t0, length, h0, rel_tol, abs_tol, generator, hermitize):
    t_end = t0 + length
    t = t0
    h = min(h0, length)
    worst = 0.0
    while t < t_end - 1e-15 * max(1.0, t_end):
        h = min(h, t_end - t)
        if h < 1e-15 * max(1.0, abs(t)):
            raise StepUnderflowError(
                f"step size underflow at t={t} (h={h})"
            )
        ks = []
        for i in range(7):
            y = m
            for aij, k in zip(_DP_A[i], ks):
                if aij != 0.0:
                    y = y + (h * aij) * k
            ks.append(generator(t + _DP_C[i] * h, y))
        m5 = m
        for b, k in zip(_DP_B5, ks):
            if b != 0.0:
                m5 = m5 + (h * b) * k
        err = np.zeros_like(m)
        for b5, b4, k in zip(_DP_B5, _DP_B4, ks):
            if b5 != b4:
                err = err + (h * (b5 - b4)) * k
        scale = abs_tol + rel_tol * np.maximum(np.abs(m), np.abs(m5))
        err_norm = float(np.max(np.abs(err) / scale))
        if err_norm <= 1.0:
            t += h
            m = m5
            res = float(np.abs(m - m.conj().T).max())
            if res > worst:
                worst = res
            if hermitize:
                m = 0.5 * (m + m.conj().T)
            factor = 5.0 if err_norm == 0.0 else min(5.0, 0.9 * err_norm ** -0.2)
        else:
            factor = max(0.2, 0.9 * err_norm ** -0.2)
        h *= factor
    return m, worst, h


def evolve(
    initial,
    generator: Callable[[float, np.ndarray], np.ndarray],
    config: IntegratorConfig,
    rates: Callable[[float], tuple[float, float]] | None = None,
) -> Trajectory:
    """Integrate d(rho)/dt = generator(t, rho) and sample the trajectory.

    `rates` optionally reports the instantaneous per-qubit rates at each
    sample time (recorded as NaN when absent).
    """
    rho0 = initial if isinstance(initial, DensityMatrix) else DensityMatrix(initial)
    m = np.array(rho0, dtype=complex)

    n_samples = int(math.floor(config.t_max / config.sample_every + 1e-9)) + 1
    n_sub = _substeps(config.sample_every, config.step)

    times: list[float] = []
    states: list[DensityMatrix] = []
    rates_a: list[float] = []
    rates_b: list[float] = []
    trace_err: list[float] = []
    min_eig: list[float] = []
    herm_res: list[float] = []
    status = STATUS_OK
    detail = ""
    pending_res = 0.0
    h_adaptive = config.step

    for k in range(n_samples):
        t_k = k * config.sample_every
        try:
            ga, gb = rates(t_k) if rates is not None else (math.nan, math.nan)
        except PoleError as exc:
            status, detail = STATUS_POLE, str(exc)
            break
        eigs = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
        low = float(eigs[0])
        try:
            state = DensityMatrix.repair(m)
        except ValueError as exc:
            status = STATUS_INVARIANT
            detail = f"{exc} at t={t_k}"
            break
        times.append(t_k)
        states.append(state)
        rates_a.append(ga)
        rates_b.append(gb)
        trace_err.append(abs(complex(m.trace()) - 1.0))
        min_eig.append(low)
        herm_res.append(pending_res)
        if k == n_samples - 1:
            break
        try:
            if config.method == RK4_FIXED:
                m, pending_res = _rk4_interval(
                    m, t_k, config.sample_every, n_sub, generator, config.hermitize
                )
            else:
                m, pending_res, h_adaptive = _rk45_interval(
                    m, t_k, config.sample_every, h_adaptive,
                    config.rel_tol, config.abs_tol, generator, config.hermitize,
                )
        except PoleError as exc:
            status, detail = STATUS_POLE, str(exc)
            break
        except StepUnderflowError as exc:
            status, detail = STATUS_UNDERFLOW, str(exc)
            break

    return Trajectory(
        times=np.array(times),
        states=states,
        rates_a=np.array(rates_a),
        rates_b=np.array(rates_b),
        trace_error=np.array(trace_err),
        min_eigenvalue=np.array(min_eig),
        hermiticity_residual=np.array(herm_res),
        status=status,
        status_detail=detail,
    )
