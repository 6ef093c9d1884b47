"""Entanglement and coherence quantifiers along trajectories.

Concurrence (the closed-form two-qubit entanglement monotone) is the primary
measure, with negativity as an independent witness; both are 1 resp. 0.5 on
the Bell state and vanish on product states.  Eigenvalue magnitudes below
1e-10 are clamped to zero so integrator noise cannot masquerade as
entanglement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .states import SIGMA_Y, kron, partial_trace

_EIG_CLAMP = 1e-10
_YY = kron(SIGMA_Y, SIGMA_Y)
_YY.setflags(write=False)


def _clamped(values: np.ndarray) -> np.ndarray:
    out = values.copy()
    out[np.abs(out) < _EIG_CLAMP] = 0.0
    return out


def concurrence(rho) -> float:
    """max(0, l1 - l2 - l3 - l4) over the square-rooted spin-flip spectrum."""
    m = np.asarray(rho, dtype=complex)
    m_tilde = _YY @ m.conj() @ _YY
    eig = np.linalg.eigvals(m @ m_tilde).real
    eig = np.clip(_clamped(eig), 0.0, None)
    lam = np.sqrt(np.sort(eig)[::-1])
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(rho) -> float:
    """Absolute sum of negative eigenvalues of the partial transpose over qubit B."""
    m = np.asarray(rho, dtype=complex)
    pt = m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    eig = _clamped(np.linalg.eigvalsh(pt))
    return float(-eig[eig < 0].sum())


def l1_coherence(rho) -> float:
    """Sum of |off-diagonal| entries."""
    off = np.asarray(rho, dtype=complex).copy()
    np.fill_diagonal(off, 0.0)
    return float(np.abs(off).sum())


def purity(rho) -> float:
    m = np.asarray(rho, dtype=complex)
    return float(np.trace(m @ m).real)


def fidelity_to(rho, reference) -> float:
    """Uhlmann fidelity (tr sqrt(sqrt(ref) rho sqrt(ref)))^2."""
    m = np.asarray(rho, dtype=complex)
    ref = np.asarray(reference, dtype=complex)
    w, v = np.linalg.eigh(ref)
    sqrt_ref = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    inner = sqrt_ref @ m @ sqrt_ref
    eig = np.clip(np.linalg.eigvalsh(inner), 0.0, None)
    return float(np.sqrt(eig).sum() ** 2)


def pop_excited(rho, qubit: str) -> float:
    """Excited-state (|1>) population of the reduced state of one qubit."""
    return float(partial_trace(rho, qubit)[1, 1].real)


def reduced_purities(rho) -> tuple[float, float]:
    """Purity of each qubit's reduced state; where dilation asymmetry shows
    up for channels that move populations."""
    ra = partial_trace(rho, "a")
    rb = partial_trace(rho, "b")
    return (float(np.trace(ra @ ra).real), float(np.trace(rb @ rb).real))


@dataclass(frozen=True)
class MetricSample:
    t: float
    concurrence: float
    negativity: float
    l1_coherence: float
    purity: float
    fidelity_to_initial: float


def sample_metrics(t: float, rho, initial) -> MetricSample:
    """All scalar metrics for one sampled state, clipped into their ranges."""
    return MetricSample(
        t=t,
        concurrence=min(max(concurrence(rho), 0.0), 1.0),
        negativity=min(max(negativity(rho), 0.0), 0.5),
        l1_coherence=max(l1_coherence(rho), 0.0),
        purity=min(max(purity(rho), 0.25), 1.0),
        fidelity_to_initial=min(max(fidelity_to(rho, initial), 0.0), 1.0),
    )


@dataclass(frozen=True)
class RevivalEvent:
    """A local minimum of the series followed by a rise above threshold."""

    t_min: float
    value_min: float
    t_detect: float
    value_detect: float

    @property
    def rise(self) -> float:
        return self.value_detect - self.value_min


def detect_revivals(series, threshold: float = 1e-4) -> list[RevivalEvent]:
    """Find rises of at least `threshold` above a running minimum.

    `series` is a sequence of (t, value) pairs sorted by t.  A strictly
    decreasing series yields no events; each dip-and-rise yields one.
    """
    points = list(series)
    if len(points) < 2:
        return []
    events: list[RevivalEvent] = []
    t_min, v_min = points[0]
    armed = True
    for t, v in points[1:]:
        if v < v_min:
            t_min, v_min = t, v
            armed = True
        elif armed and v - v_min >= threshold:
            events.append(RevivalEvent(t_min, v_min, t, v))
            t_min, v_min = t, v
            armed = False
    return events
