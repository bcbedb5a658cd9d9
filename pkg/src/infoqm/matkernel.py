"""Small dense complex-matrix kernel.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Everything here is
meant for dimensions up to 16; larger inputs raise :class:`DimensionTooLarge`.
"""

from __future__ import annotations

import numpy as np

from .config import TOL
from .errors import DimensionTooLarge, NotHermitian

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (SIGMA_X, SIGMA_Y, SIGMA_Z, IDENTITY2):
    _m.flags.writeable = False


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a 2-D complex array, rejecting oversize input."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    if max(a.shape) > TOL.max_dim:
        raise DimensionTooLarge(f"dimension {max(a.shape)} exceeds cap {TOL.max_dim}")
    return a


def is_hermitian(m, tol: float = TOL.validation) -> bool:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= tol)


def is_unitary(m, tol: float = TOL.validation) -> bool:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return bool(np.max(np.abs(a @ a.conj().T - np.eye(a.shape[0]))) <= tol)


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def hermitian_eigensystem(m, tol: float = TOL.validation) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order and the matching eigenvector columns.

    Raises :class:`NotHermitian` if ``m`` deviates from its adjoint by more
    than ``tol`` in max-norm.
    """
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(a)
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def kron(a, b) -> np.ndarray:
    """Tensor product with row index ``i*rows(b)+k`` and column ``j*cols(b)+l``."""
    out = np.kron(as_matrix(a), as_matrix(b))
    if max(out.shape) > TOL.max_dim:
        raise DimensionTooLarge(f"tensor product dimension {max(out.shape)} exceeds cap")
    return out


def unitary_exp(h, t: float) -> np.ndarray:
    """``exp(-i h t)`` for Hermitian ``h``, via its eigendecomposition."""
    w, v = hermitian_eigensystem(h)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def singular_values_3x3(t) -> np.ndarray:
    """Singular values of a real 3x3 matrix, descending, as sqrt(eig(T^T T))."""
    a = np.asarray(t, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    w = np.linalg.eigvalsh(a.T @ a)
    return np.sqrt(np.clip(w, 0.0, None))[::-1]
