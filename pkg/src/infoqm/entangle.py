"""Correlation information of two-qubit states and the Bell-violation criterion.

The criterion implemented here is ``max I_corr > 1``: the largest information
carried by joint spin correlations in one measurement plane per particle
exceeds one bit. It is equivalent to violation of the CHSH inequality
(M = s1^2 + s2^2 > 1 for the singular values of the correlation tensor), not
to entanglement in general. Werner states with 1/2 < w <= 1/sqrt(2) are
entangled yet not flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import WrongDimension
from .malus import euler_rotation
from .matkernel import IDENTITY2, PAULI, SIGMA_X, SIGMA_Y, SIGMA_Z, kron, singular_values_3x3
from .qstate import DensityMatrix, density_from_info

AXES = {"x": np.array([1.0, 0.0, 0.0]), "y": np.array([0.0, 1.0, 0.0]), "z": np.array([0.0, 0.0, 1.0])}

GRID_SIZE = 24
REFINE_TOL = 1e-7


@dataclass(frozen=True)
class PlanePair:
    """Orthonormal in-plane directions (a1, a2) for particle 1 and (b1, b2) for particle 2."""

    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        for u, v in ((self.a1, self.a2), (self.b1, self.b2)):
            if abs(u @ u - 1) > 1e-12 or abs(v @ v - 1) > 1e-12 or abs(u @ v) > 1e-12:
                raise ValueError("plane directions must be orthonormal")

    @classmethod
    def canonical(cls) -> "PlanePair":
        """The x-y plane on both sides."""
        return cls(AXES["x"], AXES["y"], AXES["x"], AXES["y"])

    @classmethod
    def from_frames(cls, r1, r2) -> "PlanePair":
        """Planes spanned by the first two columns of two rotation matrices."""
        return cls(r1[:, 0], r1[:, 1], r2[:, 0], r2[:, 1])

    def side1(self) -> np.ndarray:
        return np.column_stack([self.a1, self.a2])

    def side2(self) -> np.ndarray:
        return np.column_stack([self.b1, self.b2])


def _check_two_qubit(rho: DensityMatrix):
    if rho.dim != 4:
        raise WrongDimension(f"two-qubit state must have dim 4, got {rho.dim}")


@lru_cache(maxsize=1)
def _pauli_products() -> tuple:
    return tuple(tuple(kron(sa, sb) for sb in PAULI) for sa in PAULI)


def correlation_tensor(rho: DensityMatrix) -> np.ndarray:
    """T_ab = Tr(rho sigma_a (x) sigma_b)."""
    _check_two_qubit(rho)
    prods = _pauli_products()
    return np.array([[np.real(rho.expectation(prods[a][b])) for b in range(3)] for a in range(3)])


def local_vectors(rho: DensityMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Information vectors of the two reduced single-qubit states."""
    _check_two_qubit(rho)
    one = [np.real(rho.expectation(kron(s, IDENTITY2))) for s in PAULI]
    two = [np.real(rho.expectation(kron(IDENTITY2, s))) for s in PAULI]
    return np.array(one), np.array(two)


def spin_projector(direction) -> np.ndarray:
    """Projector onto spin up along a unit direction."""
    d = np.asarray(direction, dtype=float)
    return 0.5 * (IDENTITY2 + d[0] * SIGMA_X + d[1] * SIGMA_Y + d[2] * SIGMA_Z)


def agreement_probabilities(rho: DensityMatrix, a, b) -> tuple[float, float]:
    """Probabilities that spins along a (particle 1) and b (particle 2) agree and disagree."""
    _check_two_qubit(rho)
    up_a, up_b = spin_projector(a), spin_projector(b)
    dn_a, dn_b = IDENTITY2 - up_a, IDENTITY2 - up_b
    same = kron(up_a, up_b) + kron(dn_a, dn_b)
    p_same = float(np.real(rho.expectation(same)))
    return p_same, 1.0 - p_same


def joint_info(rho: DensityMatrix, a, b) -> float:
    """(p_agree - p_disagree)^2 for the joint proposition along a and b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float((a @ correlation_tensor(rho) @ b) ** 2)


def info_corr(rho: DensityMatrix, planes: PlanePair | None = None) -> float:
    """Sum of the four joint measures for the plane pair (canonical x-y by default)."""
    planes = planes or PlanePair.canonical()
    m = planes.side1().T @ correlation_tensor(rho) @ planes.side2()
    return float(np.sum(m**2))


@dataclass(frozen=True)
class MaxCorr:
    value: float
    argmax_planes: PlanePair
    method: str
    angles: tuple[float, ...] | None = None


def _frames(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """First two columns of R_z(alpha) R_y(beta), shape (..., 3, 2)."""
    ca, sa, cb, sb = np.cos(alpha), np.sin(alpha), np.cos(beta), np.sin(beta)
    c1 = np.stack([ca * cb, sa * cb, -sb], axis=-1)
    c2 = np.stack([-sa, ca, np.zeros_like(ca)], axis=-1)
    return np.stack([c1, c2], axis=-1)


def _objective(t: np.ndarray, x: np.ndarray) -> np.ndarray:
    """I_corr for rows of plane angles (alpha1, beta1, alpha2, beta2)."""
    x = np.atleast_2d(x)
    a = _frames(x[:, 0], x[:, 1])
    b = _frames(x[:, 2], x[:, 3])
    m = np.einsum("kia,ij,kjb->kab", a, t, b)
    return np.sum(m * m, axis=(1, 2))


def _numeric_max(t: np.ndarray, grid: int = GRID_SIZE, tol: float = REFINE_TOL):
    # A plane is fixed by its normal R_z(alpha) R_y(beta) e_z; the third Euler
    # angle spins directions within the plane and leaves I_corr unchanged.
    alpha = 2 * np.pi * np.arange(grid) / grid
    beta = np.pi * np.arange(grid) / grid
    aa, bb = np.meshgrid(alpha, beta, indexing="ij")
    frames = _frames(aa.ravel(), bb.ravel())                 # (G, 3, 2)
    g = frames.shape[0]
    left = np.einsum("gia,ij->gaj", frames, t).reshape(2 * g, 3)
    right = frames.transpose(1, 0, 2).reshape(3, 2 * g)
    vals = (left @ right).reshape(g, 2, g, 2)
    scores = np.sum(vals**2, axis=(1, 3))                     # (G, G)
    # argmax returns the first maximum in row-major order: lexicographic tie-break
    g1, g2 = np.unravel_index(int(np.argmax(scores)), scores.shape)
    x = np.array([aa.ravel()[g1], bb.ravel()[g1], aa.ravel()[g2], bb.ravel()[g2]])
    best = float(_objective(t, x)[0])

    # Coordinate descent with a shrinking step. Moves are tried in the fixed
    # order (+a1, -a1, +b1, -b1, ...) and the first improving one is taken.
    moves = np.repeat(np.eye(4), 2, axis=0) * np.tile([1.0, -1.0], 4)[:, None]
    step = np.pi / grid
    while step >= tol:
        while True:
            trials = x + step * moves
            vals = _objective(t, trials)
            better = np.flatnonzero(vals > best + 1e-15)
            if better.size == 0:
                break
            x, best = trials[better[0]], float(vals[better[0]])
        step /= 2
    return best, tuple(float(v) for v in x)


def max_info_corr(rho: DensityMatrix, method: str = "analytic") -> MaxCorr:
    """Maximum of I_corr over all pairs of measurement planes.

    ``analytic`` returns s1^2 + s2^2 from the correlation tensor's singular
    values; ``numeric`` searches plane orientations directly (24 x 24 grid of
    plane normals per side, then coordinate descent to 1e-7 in angle).
    """
    t = correlation_tensor(rho)
    if method == "analytic":
        u, s, vt = np.linalg.svd(t)
        sv = singular_values_3x3(t)
        planes = PlanePair(u[:, 0], u[:, 1], vt[0], vt[1])
        return MaxCorr(float(sv[0] ** 2 + sv[1] ** 2), planes, "analytic")
    if method == "numeric":
        value, x = _numeric_max(t)
        r1 = euler_rotation(x[0], x[1], 0.0)
        r2 = euler_rotation(x[2], x[3], 0.0)
        return MaxCorr(value, PlanePair.from_frames(r1, r2), "numeric", x)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class Verdict:
    M: float
    chsh_max: float
    violates_bell: bool
    entangled_by_criterion: bool
    singular_values: tuple[float, float, float]


def chsh_and_verdict(rho: DensityMatrix) -> Verdict:
    """CHSH maximum 2 sqrt(M) and the two (equivalent) strict verdicts M > 1."""
    t = correlation_tensor(rho)
    s = singular_values_3x3(t)
    m = float(s[0] ** 2 + s[1] ** 2)
    best = max_info_corr(rho, "analytic").value
    return Verdict(
        M=m,
        chsh_max=2.0 * math.sqrt(m),
        violates_bell=m > 1.0,
        entangled_by_criterion=best > 1.0,
        singular_values=tuple(float(v) for v in s),
    )


def bell_singlet() -> DensityMatrix:
    """(|01> - |10>)/sqrt(2), the spin singlet."""
    return DensityMatrix.pure(np.array([0, 1, -1, 0]) / math.sqrt(2))


def werner(w: float) -> DensityMatrix:
    """w |psi-><psi-| + (1 - w) I/4."""
    return DensityMatrix(w * bell_singlet().matrix + (1 - w) * np.eye(4) / 4)


def product_state(i1, i2) -> DensityMatrix:
    """Tensor product of two qubit states given by their information vectors."""
    return DensityMatrix(kron(density_from_info(i1).matrix, density_from_info(i2).matrix))
