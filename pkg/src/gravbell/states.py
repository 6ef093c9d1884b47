"""Two-qubit states and the small operator algebra they need.

Basis ordering is |00>, |01>, |10>, |11> with qubit A in the left tensor
slot, so the Bell coherence of (|00>+|11>)/sqrt(2) sits at entries (1,4) and
(4,1) of the 4x4 matrix.  |0> is the ground state and sigma_z|0> = +|0>;
sigma_minus = |0><1| therefore de-excites.
"""

from __future__ import annotations

import numpy as np


def _const(rows) -> np.ndarray:
    m = np.array(rows, dtype=complex)
    m.setflags(write=False)
    return m


SIGMA_X = _const([[0, 1], [1, 0]])
SIGMA_Y = _const([[0, -1j], [1j, 0]])
SIGMA_Z = _const([[1, 0], [0, -1]])
IDENTITY_2 = _const([[1, 0], [0, 1]])
SIGMA_MINUS = _const([[0, 1], [0, 0]])  # |0><1|
SIGMA_PLUS = _const([[0, 0], [1, 0]])   # |1><0|

_PAULI = {
    "x": SIGMA_X,
    "y": SIGMA_Y,
    "z": SIGMA_Z,
    "i": IDENTITY_2,
    "plus": SIGMA_PLUS,
    "minus": SIGMA_MINUS,
}


def pauli(which: str) -> np.ndarray:
    """One of the 2x2 operators 'x', 'y', 'z', 'i', 'plus', 'minus'."""
    try:
        return _PAULI[which.lower()]
    except KeyError:
        raise ValueError(
            f"unknown operator {which!r}; expected one of {sorted(_PAULI)}"
        ) from None


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with `a` acting on qubit A (left slot)."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"expected 2x2 factors, got {a.shape} and {b.shape}")
    return np.kron(a, b)


class DensityMatrix:
    """4x4 Hermitian, unit-trace, positive-semidefinite two-qubit state.

    Constructor tolerances reject anything that is not a state up to float
    noise; `repair` first re-hermitizes via (rho + rho^dag)/2 and accepts the
    looser trace/positivity drift an integrator accumulates.
    """

    __slots__ = ("_m",)

    def __init__(
        self,
        matrix,
        *,
        herm_tol: float = 1e-12,
        trace_tol: float = 1e-12,
        min_eig_tol: float = 1e-10,
    ) -> None:
        m = np.asarray(matrix, dtype=complex)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        herm = float(np.abs(m - m.conj().T).max())
        if herm > herm_tol:
            raise ValueError(f"matrix is not Hermitian (residual {herm:.3e})")
        trace_err = abs(m.trace() - 1.0)
        if trace_err > trace_tol:
            raise ValueError(f"trace deviates from 1 by {trace_err:.3e}")
        min_eig = float(np.linalg.eigvalsh(m)[0])
        if min_eig < -min_eig_tol:
            raise ValueError(f"matrix is not positive semidefinite "
                             f"(min eigenvalue {min_eig:.3e})")
        m = m.copy()
        m.setflags(write=False)
        self._m = m

    @classmethod
    def repair(
        cls,
        matrix,
        *,
        trace_tol: float = 1e-9,
        min_eig_tol: float = 1e-6,
    ) -> "DensityMatrix":
        """Re-hermitize then validate; intended for integrator output."""
        m = np.asarray(matrix, dtype=complex)
        return cls(
            0.5 * (m + m.conj().T),
            trace_tol=trace_tol,
            min_eig_tol=min_eig_tol,
        )

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        if dtype is None:
            return self._m
        return self._m.astype(dtype)

    def __repr__(self) -> str:
        return f"DensityMatrix({self._m!r})"


def bell_state() -> DensityMatrix:
    """(|00> + |11>)/sqrt(2) as a density matrix."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[0, 3] = m[3, 0] = m[3, 3] = 0.5
    return DensityMatrix(m)


def partial_trace(rho, keep: str) -> np.ndarray:
    """Reduced 2x2 state of qubit 'a' or 'b'."""
    m = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    which = keep.lower()
    if which == "a":
        return np.einsum("ijkj->ik", m)
    if which == "b":
        return np.einsum("ijil->jl", m)
    raise ValueError(f"keep must be 'a' or 'b', got {keep!r}")


def eigvals_hermitian(m, herm_tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in descending order."""
    m = np.asarray(m, dtype=complex)
    residual = float(np.abs(m - m.conj().T).max())
    if residual > herm_tol:
        raise ValueError(f"matrix is not Hermitian (residual {residual:.3e})")
    return np.linalg.eigvalsh(m)[::-1]
