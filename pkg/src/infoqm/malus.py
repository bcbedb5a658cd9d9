"""Rotations of the information vector and the resulting cos^2 probability law.

Changing one experimental parameter theta rotates the information vector in
the (i2, i3) plane by the angle n*theta, where n is a free positive constant
(1/2 for spin-1/2, 1 for photons, 2 for gravitons). The rotation entries f
and g are obtained here by integrating the differential equation that the
composition law imposes, and compared against the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .qstate import density_from_info, measurement_update

PRESETS = {"spin-1/2": 0.5, "photon": 1.0, "graviton": 2.0}

# Neighborhood of f = +-1 left out of relative-error metrics.
SINGULAR_EXCLUSION = 1e-6
DEFAULT_STEPS = 10_000  # per 2*pi


@dataclass(frozen=True)
class MalusParameter:
    n: float

    def __post_init__(self):
        if not (self.n > 0 and math.isfinite(self.n)):
            raise ValueError(f"winding constant must be positive, got {self.n!r}")


def _n(n) -> float:
    return n.n if isinstance(n, MalusParameter) else MalusParameter(float(n)).n


@dataclass(frozen=True)
class FSolution:
    """Sampled f and g, with the sup deviation of f from cos(n theta).

    ``max_rel_error`` scales the deviation by sqrt(1 - f^2), the magnitude of
    the right-hand side, away from the turning points.
    """

    theta: np.ndarray
    f: np.ndarray
    g: np.ndarray
    max_abs_error: float
    max_rel_error: float


def _rk4_step(nv: float, fv: float, gv: float, h: float) -> tuple[float, float]:
    # f' = -n g, g' = n f
    k1f, k1g = -nv * gv, nv * fv
    k2f, k2g = -nv * (gv + 0.5 * h * k1g), nv * (fv + 0.5 * h * k1f)
    k3f, k3g = -nv * (gv + 0.5 * h * k2g), nv * (fv + 0.5 * h * k2f)
    k4f, k4g = -nv * (gv + h * k3g), nv * (fv + h * k3f)
    return (
        fv + h / 6.0 * (k1f + 2 * k2f + 2 * k3f + k4f),
        gv + h / 6.0 * (k1g + 2 * k2g + 2 * k3g + k4g),
    )


def solve_f_ode(n, theta_max: float = 2 * math.pi, steps: int = DEFAULT_STEPS) -> FSolution:
    """Integrate df/dtheta = -n sqrt(1 - f^2) from f(0) = 1 with fixed-step RK4.

    The square root is not Lipschitz at f = +-1, where the solution must turn
    around. The branch is tracked through g = -f'/n, which satisfies the
    companion equation dg/dtheta = n f with g(0) = 0. Integrating the pair
    (f, g) keeps g continuous through the turning points, and f' = -n g then
    equals -n sqrt(1 - f^2) with the sign of g selecting the branch.
    """
    nv = _n(n)
    if steps < 100:
        raise ValueError("steps must be at least 100")
    h = theta_max / steps
    theta = np.linspace(0.0, theta_max, steps + 1)
    f = np.empty(steps + 1)
    g = np.empty(steps + 1)
    f[0], g[0] = 1.0, 0.0

    fv, gv = 1.0, 0.0
    for k in range(steps):
        fv, gv = _rk4_step(nv, fv, gv, h)
        f[k + 1], g[k + 1] = fv, gv

    closed = np.cos(nv * theta)
    err = np.abs(f - closed)
    keep = np.abs(np.abs(closed) - 1.0) > SINGULAR_EXCLUSION
    slope = np.sqrt(1.0 - closed[keep] ** 2)
    rel = float(np.max(err[keep] / slope, initial=0.0))
    return FSolution(theta, f, g, float(err.max()), rel)


def rotation_theta(n, theta: float) -> np.ndarray:
    """Rotation of the information vector about the i1 axis by n*theta."""
    a = _n(n) * theta
    c, s = math.cos(a), math.sin(a)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rotation_between(n, theta_from: float, theta_to: float) -> np.ndarray:
    """Transformation for a parameter change; depends only on the difference."""
    return rotation_theta(n, theta_to - theta_from)


def malus_probability(n, theta: float) -> float:
    """p = cos^2(n theta / 2)."""
    return math.cos(_n(n) * theta / 2.0) ** 2


def rot_z(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rot_y(angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def euler_rotation(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """R_z(alpha) R_y(beta) R_z(gamma)."""
    return rot_z(alpha) @ rot_y(beta) @ rot_z(gamma)


def is_rotation(r, tol: float = 1e-10) -> bool:
    r = np.asarray(r, dtype=float)
    return (
        r.shape == (3, 3)
        and float(np.max(np.abs(r.T @ r - np.eye(3)))) <= tol
        and abs(np.linalg.det(r) - 1.0) <= tol
    )


def quantum_oracle_probability(theta: float) -> float:
    """Tr(rho_z P_theta) for spin up along z measured along (sin theta, 0, cos theta)."""
    rho_z = density_from_info((0.0, 0.0, 1.0))
    direction = (math.sin(theta), 0.0, math.cos(theta))
    projector = density_from_info(direction).matrix
    _, prob = measurement_update(rho_z, projector, outcome_observed=False)
    return prob


def sweep(n, theta_lo: float, theta_hi: float, points: int) -> list[dict]:
    """Tabulate ODE, closed form, Malus law and density-matrix oracle on a grid.

    The oracle column uses the spin-1/2 projector with angle n*theta so it is
    comparable with cos^2(n theta / 2) for any n.
    """
    nv = _n(n)
    if points < 2:
        raise ValueError("sweep needs at least 2 points")
    thetas = np.linspace(theta_lo, theta_hi, points)
    max_h = 2 * math.pi / DEFAULT_STEPS
    rows = []
    # march from 0 outwards so each sample continues the previous integration
    f_at = {}
    for side in (thetas[thetas >= 0], thetas[thetas < 0][::-1]):
        pos, fv, gv = 0.0, 1.0, 0.0
        for th in side:
            th = float(th)
            span = th - pos
            steps = max(1, math.ceil(abs(span) / max_h)) if span else 0
            for _ in range(steps):
                fv, gv = _rk4_step(nv, fv, gv, span / steps)
            pos = th
            f_at[th] = fv
    for th in thetas:
        th = float(th)
        p_malus = malus_probability(nv, th)
        p_oracle = quantum_oracle_probability(nv * th)
        rows.append(
            {
                "theta": th,
                "f_ode": f_at[th],
                "f_closed": math.cos(nv * th),
                "p_malus": p_malus,
                "p_oracle": p_oracle,
                "abs_err": abs(p_malus - p_oracle),
            }
        )
    return rows
