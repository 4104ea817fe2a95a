"""Dense complex linear-algebra kernel.

All operators are plain ``numpy`` arrays of dtype ``complex128``. Units follow
the package convention: hbar = 1, angular frequencies in rad/us, times in us.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "ContractError",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "IDENTITY2",
    "N_EXCITED",
    "kron",
    "lift",
    "is_hermitian",
    "is_unitary",
    "unitary_exp",
    "phase_distance",
    "optimal_phase",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)
# excitation number n = (1 - sigma_z) / 2, i.e. projector on the Rydberg level
N_EXCITED = np.array([[0, 0], [0, 1]], dtype=complex)

HERMITIAN_TOL = 1e-12
UNITARY_TOL = 1e-10


class ContractError(ValueError):
    """Raised when an operation is called outside its stated preconditions."""


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the first factor as the most significant index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def lift(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Embed a single-site 2x2 operator at position ``site`` of ``n_sites`` qubits."""
    if not 0 <= site < n_sites:
        raise ContractError(f"site {site} outside register of {n_sites}")
    left = np.eye(2**site, dtype=complex)
    right = np.eye(2 ** (n_sites - site - 1), dtype=complex)
    return kron(kron(left, op), right)


def _scale(m: np.ndarray) -> float:
    return max(1.0, float(np.abs(m).max(initial=0.0)))


def is_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    """Max-entry test ``|H - H^dagger| < tol``, relative to the largest entry when above 1."""
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    return float(np.abs(h - h.conj().T).max(initial=0.0)) < tol * _scale(h)


def is_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    eye = np.eye(u.shape[0])
    return float(np.abs(u.conj().T @ u - eye).max(initial=0.0)) < tol


def unitary_exp(h: np.ndarray, t: float) -> np.ndarray:
    """Return ``exp(-i h t)`` for a Hermitian generator ``h``.

    The exponential is taken through the Hermitian eigendecomposition, which is
    exact up to round-off for the small dense operators used here.

    Raises
    ------
    ContractError
        If ``h`` is not Hermitian within tolerance.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ContractError("generator is not Hermitian")
    h = 0.5 * (h + h.conj().T)
    evals, evecs = np.linalg.eigh(h)
    return (evecs * np.exp(-1j * evals * t)) @ evecs.conj().T


def optimal_phase(u: np.ndarray, v: np.ndarray) -> float:
    """Phase ``theta`` aligning ``exp(i theta) v`` with ``u``: ``arg Tr(v^dagger u)``."""
    overlap = np.vdot(np.asarray(v).ravel(), np.asarray(u).ravel())
    if abs(overlap) == 0.0:
        return 0.0
    return float(np.angle(overlap))


def phase_distance(u: np.ndarray, v: np.ndarray) -> float:
    """Distance between two operators modulo a global phase.

    Returns ``max |u - exp(i theta*) v|`` with ``theta* = arg Tr(v^dagger u)``.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ContractError(f"shape mismatch: {u.shape} vs {v.shape}")
    theta = optimal_phase(u, v)
    return float(np.abs(u - np.exp(1j * theta) * v).max(initial=0.0))
