"""Information vectors, density matrices, and the maps between them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import TOL
from .errors import (
    DimensionMismatch,
    InvalidState,
    NotProjector,
    UnphysicalVector,
    WrongDimension,
    ZeroProbabilityOutcome,
)
from .infomeasure import UNIT, NormalizationScheme
from .matkernel import IDENTITY2, PAULI, as_matrix, is_hermitian
from .mub import MubSet


@dataclass(frozen=True)
class InfoVector:
    """Catalog of knowledge (i1, i2, i3) about three complementary spin propositions.

    Each component is p(yes) - p(no) for spin measured along x, y, z.
    Construction does not enforce physicality; see :meth:`check_physical`.
    """

    i1: float
    i2: float
    i3: float

    @classmethod
    def from_array(cls, v: Sequence[float]) -> "InfoVector":
        a = np.asarray(v, dtype=float)
        if a.shape != (3,):
            raise ValueError(f"information vector needs 3 components, got shape {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.i1, self.i2, self.i3])

    @property
    def norm_sq(self) -> float:
        return self.i1**2 + self.i2**2 + self.i3**2

    def is_physical(self, tol: float = TOL.validation) -> bool:
        return self.norm_sq <= 1.0 + tol

    def is_pure(self, tol: float = TOL.validation) -> bool:
        return abs(self.norm_sq - 1.0) <= tol

    def check_physical(self) -> "InfoVector":
        if not self.is_physical():
            raise UnphysicalVector(f"|i|^2 = {self.norm_sq!r} exceeds 1")
        return self

    def to_json(self) -> dict:
        return {"i": [self.i1, self.i2, self.i3]}

    @classmethod
    def from_json(cls, obj: dict) -> "InfoVector":
        try:
            v = obj["i"]
        except (KeyError, TypeError):
            raise InvalidState('information vector JSON needs an "i" array') from None
        return cls.from_array(v).check_physical()


class DensityMatrix:
    """Validated Hermitian, unit-trace, positive semidefinite matrix.

    Instances are immutable; the underlying array is read-only.
    """

    __slots__ = ("_m",)

    def __init__(self, matrix, tol: float = TOL.validation):
        m = as_matrix(matrix)
        if m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise InvalidState(f"density matrix must be square with dim >= 2, got {m.shape}")
        if not is_hermitian(m, tol):
            raise InvalidState("density matrix is not Hermitian")
        tr = np.trace(m)
        if abs(tr - 1.0) > tol:
            raise InvalidState(f"density matrix trace is {tr!r}, not 1")
        m = 0.5 * (m + m.conj().T)
        lo = np.linalg.eigvalsh(m)[0]
        if lo < -tol:
            raise InvalidState(f"density matrix has negative eigenvalue {lo!r}")
        m.flags.writeable = False
        self._m = m

    @classmethod
    def pure(cls, psi) -> "DensityMatrix":
        v = np.asarray(psi, dtype=complex).ravel()
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def dim(self) -> int:
        return self._m.shape[0]

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self._m @ self._m)))

    def expectation(self, op) -> complex:
        return complex(np.trace(self._m @ op))

    def transformed(self, u) -> "DensityMatrix":
        u = np.asarray(u, dtype=complex)
        return DensityMatrix(u @ self._m @ u.conj().T)

    def __array__(self, dtype=None, copy=None):
        return self._m if dtype is None else self._m.astype(dtype)

    def __repr__(self):
        return f"DensityMatrix(dim={self.dim}, purity={self.purity:.6g})"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "re": self._m.real.tolist(),
            "im": self._m.imag.tolist(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DensityMatrix":
        try:
            dim = int(obj["dim"])
            m = np.asarray(obj["re"], dtype=float) + 1j * np.asarray(obj["im"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidState(f"malformed density matrix JSON: {exc}") from None
        if m.shape != (dim, dim):
            raise InvalidState(f'"re"/"im" shape {m.shape} does not match dim {dim}')
        return cls(m)


def load_state(path) -> DensityMatrix:
    """Read a state file in either the density-matrix or the info-vector format."""
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidState(f"{path}: not valid JSON ({exc})") from None
    if isinstance(obj, dict) and "i" in obj:
        return density_from_info(InfoVector.from_json(obj))
    return DensityMatrix.from_json(obj)


def density_from_info(i: InfoVector | Sequence[float]) -> DensityMatrix:
    """rho = (1 + i . sigma) / 2."""
    if not isinstance(i, InfoVector):
        i = InfoVector.from_array(i)
    i.check_physical()
    rho = 0.5 * IDENTITY2 + 0.5 * sum(c * s for c, s in zip(i.as_array(), PAULI))
    return DensityMatrix(rho)


def info_from_density(rho: DensityMatrix) -> InfoVector:
    """i_j = Tr(rho sigma_j)."""
    if rho.dim != 2:
        raise WrongDimension(f"information vector needs a qubit state, got dim {rho.dim}")
    return InfoVector(*(float(np.real(rho.expectation(s))) for s in PAULI))


def total_info_qubit(i: InfoVector) -> float:
    """Sum of the three binary measures i_j**2."""
    return i.check_physical().norm_sq


def mub_probabilities(rho: DensityMatrix, bases: MubSet) -> list[np.ndarray]:
    """Outcome probabilities <e_j|rho|e_j> for every basis of the set."""
    if rho.dim != bases.dim:
        raise DimensionMismatch(f"state dim {rho.dim} != basis dim {bases.dim}")
    out = []
    for b in bases:
        p = np.real(np.einsum("ij,ik,kj->j", b.conj(), rho.matrix, b))
        out.append(np.clip(p, 0.0, 1.0))
    return out


def total_info_general(
    rho: DensityMatrix, bases: MubSet, scheme: NormalizationScheme = UNIT
) -> float:
    """Normalized information summed over a complete set of unbiased measurements."""
    n = rho.dim
    probs = mub_probabilities(rho, bases)
    return float(scheme.factor(n) * sum(np.sum((p - 1.0 / n) ** 2) for p in probs))


def measurement_update(
    rho: DensityMatrix, projector, outcome_observed: bool = True
) -> tuple[DensityMatrix, float]:
    """Probability Tr(P rho) of a projective outcome and the state after it.

    If ``outcome_observed`` is false the state is returned unchanged along with
    the probability.
    """
    p_op = as_matrix(projector)
    if p_op.shape != rho.matrix.shape:
        raise DimensionMismatch(f"projector shape {p_op.shape} != state dim {rho.dim}")
    if not is_hermitian(p_op) or np.max(np.abs(p_op @ p_op - p_op)) > TOL.validation:
        raise NotProjector("operator is not a Hermitian idempotent")
    prob = float(np.real(np.trace(p_op @ rho.matrix)))
    if not outcome_observed:
        return rho, prob
    if prob < TOL.zero_probability:
        raise ZeroProbabilityOutcome(f"outcome has probability {prob!r}")
    post = p_op @ rho.matrix @ p_op / prob
    return DensityMatrix(post), prob
