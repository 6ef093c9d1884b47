"""Master-equation generators with redshift-scaled per-qubit rates.

Three local noise channels are supported: pure dephasing (sigma_z jumps),
amplitude damping (sigma_minus jumps), and generalized amplitude damping
(decay weighted by gamma(n_th+1), thermal excitation by gamma*n_th).  Each
generator returns d(rho)/dt as a plain 4x4 array; all of them are Hermitian-
and trace-preserving and linear in rho.

The dephasing dissipator is implemented in its collapsed form
gamma (Z rho Z - rho): since sigma_z^dag sigma_z = I, the anticommutator of
the full Lindblad form reduces to rho, so the two are identical (asserted in
the tests).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import HBAR, K_B
from .spacetime import RedshiftPair
from .states import IDENTITY_2, SIGMA_MINUS, SIGMA_PLUS, SIGMA_Z, kron

_ZA = kron(SIGMA_Z, IDENTITY_2)
_ZB = kron(IDENTITY_2, SIGMA_Z)
_SM_A = kron(SIGMA_MINUS, IDENTITY_2)
_SP_A = kron(SIGMA_PLUS, IDENTITY_2)
_SM_B = kron(IDENTITY_2, SIGMA_MINUS)
_SP_B = kron(IDENTITY_2, SIGMA_PLUS)
_EXCITED_A = _SP_A @ _SM_A   # |1><1| (x) I
_EXCITED_B = _SP_B @ _SM_B
_GROUND_A = _SM_A @ _SP_A    # |0><0| (x) I
_GROUND_B = _SM_B @ _SP_B
for _op in (_ZA, _ZB, _SM_A, _SP_A, _SM_B, _SP_B,
            _EXCITED_A, _EXCITED_B, _GROUND_A, _GROUND_B):
    _op.setflags(write=False)


class ChannelKind(str, Enum):
    PHASE_DAMPING = "phase_damping"
    AMPLITUDE_DAMPING = "amplitude_damping"
    GENERALIZED_AMPLITUDE_DAMPING = "generalized_amplitude_damping"


@dataclass(frozen=True)
class ChannelSpec:
    """Which noise channel to apply and its parameters.

    `gamma` is the proper-time base rate.  `include_hamiltonian` defaults to
    False for pure dephasing (the coherent term commutes with sigma_z noise)
    and True otherwise; pass a bool to override.  `redshift_hamiltonian`
    additionally scales the two local qubit frequencies by alpha and beta.
    """

    kind: ChannelKind
    gamma: float
    include_hamiltonian: bool | None = None
    omega: float = 1.0
    n_th_a: float = 0.0
    n_th_b: float = 0.0
    redshift_hamiltonian: bool = False

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")
        if self.omega < 0:
            raise ValueError(f"omega must be non-negative, got {self.omega}")
        for name, n in (("n_th_a", self.n_th_a), ("n_th_b", self.n_th_b)):
            if n < 0:
                raise ValueError(f"{name} must be non-negative, got {n}")
        if self.include_hamiltonian is None:
            object.__setattr__(
                self, "include_hamiltonian",
                self.kind is not ChannelKind.PHASE_DAMPING,
            )


@dataclass(frozen=True)
class EffectiveRates:
    """Coordinate-time rates (gamma_a, gamma_b) for the two qubits.

    Negative values are legal: time-dependent non-Markovian rates may dip
    below zero.
    """

    gamma_a: float
    gamma_b: float


def effective_rates(gamma: float, redshift: RedshiftPair) -> EffectiveRates:
    """(gamma * alpha, gamma * beta): local proper-time rate seen in coordinate time."""
    if gamma < 0:
        raise ValueError(f"gamma must be non-negative, got {gamma}")
    return EffectiveRates(gamma * redshift.alpha, gamma * redshift.beta)


def thermal_occupation(omega: float, temperature: float) -> float:
    """Bose-Einstein mean occupation 1/(exp(hbar w / kB T) - 1)."""
    if omega <= 0:
        raise ValueError(f"omega must be positive, got {omega}")
    if temperature <= 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    x = HBAR * omega / (K_B * temperature)
    if x > 700.0:  # exp would overflow; occupation is e^-x to this precision
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def hamiltonian_term(rho, omega: float, alpha: float = 1.0, beta: float = 1.0) -> np.ndarray:
    """-i[H, rho] with H = (omega/2)(alpha sigma_z (x) I + beta I (x) sigma_z)."""
    m = np.asarray(rho, dtype=complex)
    h = (0.5 * omega) * (alpha * _ZA + beta * _ZB)
    return -1j * (h @ m - m @ h)


def dephasing_rhs(rho, rates: EffectiveRates) -> np.ndarray:
    """Pure dephasing generator: populations fixed, coherences decay."""
    m = np.asarray(rho, dtype=complex)
    return (rates.gamma_a * (_ZA @ m @ _ZA - m)
            + rates.gamma_b * (_ZB @ m @ _ZB - m))


def _dissipator(jump, jump_dag, jdag_j, m) -> np.ndarray:
    return jump @ m @ jump_dag - 0.5 * (jdag_j @ m + m @ jdag_j)


def amplitude_damping_rhs(
    rho,
    rates: EffectiveRates,
    include_h: bool = False,
    omega: float = 1.0,
) -> np.ndarray:
    """Independent |1> -> |0> decay on each qubit, optionally with -i[H, rho]."""
    m = np.asarray(rho, dtype=complex)
    out = (rates.gamma_a * _dissipator(_SM_A, _SP_A, _EXCITED_A, m)
           + rates.gamma_b * _dissipator(_SM_B, _SP_B, _EXCITED_B, m))
    if include_h:
        out = out + hamiltonian_term(m, omega)
    return out


def gad_rhs(rho, rates: EffectiveRates, n_th_a: float, n_th_b: float) -> np.ndarray:
    """Generalized amplitude damping with per-qubit thermal occupations.

    Emission is weighted by gamma_x (n_th_x + 1), absorption by
    gamma_x n_th_x; n_th_a = n_th_b = 0 reduces to plain amplitude damping.
    """
    if n_th_a < 0 or n_th_b < 0:
        raise ValueError(
            f"thermal occupations must be non-negative, got {n_th_a}, {n_th_b}"
        )
    m = np.asarray(rho, dtype=complex)
    out = rates.gamma_a * (n_th_a + 1.0) * _dissipator(_SM_A, _SP_A, _EXCITED_A, m)
    out += rates.gamma_a * n_th_a * _dissipator(_SP_A, _SM_A, _GROUND_A, m)
    out += rates.gamma_b * (n_th_b + 1.0) * _dissipator(_SM_B, _SP_B, _EXCITED_B, m)
    out += rates.gamma_b * n_th_b * _dissipator(_SP_B, _SM_B, _GROUND_B, m)
    return out
