"""Time evolution of a qubit's information vector.

Conventions (hbar = 1): a Hamiltonian H = (Tr H / 2) I + (u . sigma) / 2
rotates the information vector as di/dt = u x i, with u_j = Tr(H sigma_j).
The trace part only contributes a global phase. Evolution is closed: no
information is exchanged with an environment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .config import TOL
from .errors import NotHermitian, WrongDimension, ZeroField
from .matkernel import IDENTITY2, PAULI, as_matrix, is_hermitian, unitary_exp
from .qstate import DensityMatrix, InfoVector


@dataclass(frozen=True)
class RotationAxis:
    """Angular-velocity vector u, constant or piecewise constant in time.

    For a schedule, ``times`` holds the increasing switch times t_0 < t_1 < ...
    and ``vectors[k]`` applies on [t_k, t_{k+1}); the last vector applies
    from its switch time onwards and the first one before t_0.
    """

    vector: np.ndarray
    times: np.ndarray | None = None
    vectors: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=float)
        if v.shape != (3,) or not np.all(np.isfinite(v)):
            raise ValueError("rotation axis needs 3 finite components")
        object.__setattr__(self, "vector", v)
        if self.times is not None:
            ts = np.asarray(self.times, dtype=float)
            vs = np.asarray(self.vectors, dtype=float)
            if vs.shape != (ts.size, 3) or ts.size == 0:
                raise ValueError("schedule needs one 3-vector per switch time")
            if np.any(np.diff(ts) <= 0):
                raise ValueError("schedule times must be strictly increasing")
            if not np.all(np.isfinite(vs)):
                raise ValueError("schedule vectors must be finite")
            object.__setattr__(self, "times", ts)
            object.__setattr__(self, "vectors", vs)

    @classmethod
    def schedule(cls, times: Sequence[float], vectors) -> "RotationAxis":
        vs = np.asarray(vectors, dtype=float)
        return cls(vs[0], times, vs)

    @property
    def is_constant(self) -> bool:
        return self.times is None

    def at(self, t: float) -> np.ndarray:
        if self.times is None:
            return self.vector
        k = int(np.searchsorted(self.times, t, side="right")) - 1
        return self.vectors[max(k, 0)]


def _hamiltonian(h) -> np.ndarray:
    m = as_matrix(h)
    if m.shape != (2, 2):
        raise WrongDimension(f"qubit Hamiltonian must be 2x2, got {m.shape}")
    if not is_hermitian(m, TOL.identity):
        raise NotHermitian("Hamiltonian is not Hermitian")
    return m


def axis_from_hamiltonian(h) -> RotationAxis:
    """u_j = Tr(H sigma_j)."""
    m = _hamiltonian(h)
    return RotationAxis(np.array([np.real(np.trace(m @ s)) for s in PAULI]))


def hamiltonian_from_axis(u, trace: float = 0.0) -> np.ndarray:
    """Inverse map: H = (trace I + u . sigma) / 2."""
    u = u.vector if isinstance(u, RotationAxis) else np.asarray(u, dtype=float)
    return 0.5 * (trace * IDENTITY2 + sum(c * s for c, s in zip(u, PAULI)))


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    vectors: np.ndarray  # shape (steps + 1, 3)

    @property
    def final(self) -> InfoVector:
        return InfoVector.from_array(self.vectors[-1])

    @property
    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.vectors, axis=1)


def _cross_matrix(u: np.ndarray) -> np.ndarray:
    """Matrix A with A @ i == cross(u, i)."""
    return np.array([[0.0, -u[2], u[1]], [u[2], 0.0, -u[0]], [-u[1], u[0], 0.0]])


def evolve_info(i0, u: RotationAxis | Sequence[float], t: float, dt: float = 1e-3) -> Trajectory:
    """Integrate di/dt = u x i with classical RK4 from 0 to t.

    The step is the largest value not exceeding ``dt`` that divides ``t``
    evenly, so the trajectory ends exactly at ``t``.
    """
    if dt <= 0 or t < 0:
        raise ValueError("need dt > 0 and t >= 0")
    if not isinstance(u, RotationAxis):
        u = RotationAxis(u)
    i = i0.as_array() if isinstance(i0, InfoVector) else np.asarray(i0, dtype=float)
    steps = max(1, math.ceil(t / dt - 1e-9)) if t > 0 else 0
    h = t / steps if steps else 0.0
    times = np.linspace(0.0, t, steps + 1)
    out = np.empty((steps + 1, 3))
    out[0] = i
    if u.is_constant:
        # For a linear field the RK4 update is a fixed matrix: the degree-4
        # Taylor polynomial of exp(h A).
        ha = h * _cross_matrix(u.vector)
        step = np.eye(3) + ha @ (np.eye(3) + ha @ (np.eye(3) / 2 + ha @ (np.eye(3) / 6 + ha / 24)))
        for k in range(steps):
            i = step @ i
            out[k + 1] = i
        return Trajectory(times, out)
    # Piecewise-constant schedule: each step uses the axis at its midpoint,
    # so steps that do not straddle a switch time are integrated exactly as
    # in the constant case.
    for k in range(steps):
        a = _cross_matrix(u.at(times[k] + 0.5 * h))
        k1 = a @ i
        k2 = a @ (i + 0.5 * h * k1)
        k3 = a @ (i + 0.5 * h * k2)
        k4 = a @ (i + h * k3)
        i = i + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        out[k + 1] = i
    return Trajectory(times, out)


def evolve_exact(rho0: DensityMatrix, h, t: float) -> DensityMatrix:
    """rho(t) = U rho0 U^dag with U = exp(-i H t)."""
    if rho0.dim != 2:
        raise WrongDimension(f"qubit evolution needs dim 2, got {rho0.dim}")
    return rho0.transformed(unitary_exp(_hamiltonian(h), t))


def evolve_exact_schedule(rho0: DensityMatrix, u: RotationAxis, t: float, dt: float = 1e-4) -> DensityMatrix:
    """Reference evolution for a piecewise-constant axis: ordered product of short exponentials."""
    if rho0.dim != 2:
        raise WrongDimension(f"qubit evolution needs dim 2, got {rho0.dim}")
    steps = max(1, math.ceil(t / dt - 1e-9)) if t > 0 else 0
    h = t / steps if steps else 0.0
    total = np.eye(2, dtype=complex)
    for k in range(steps):
        mid = (k + 0.5) * h
        total = unitary_exp(hamiltonian_from_axis(u.at(mid)), h) @ total
    return rho0.transformed(total)


def debroglie_period(u: RotationAxis | Sequence[float]) -> float:
    """Time for one full turn of the information vector: 2 pi / |u|."""
    if not isinstance(u, RotationAxis):
        u = RotationAxis(u)
    if not u.is_constant:
        raise ValueError("the period is defined for a constant axis only")
    w = float(np.linalg.norm(u.vector))
    if w < TOL.zero_field:
        raise ZeroField("no rotation without a field")
    return 2 * math.pi / w
