"""Information measures over the outcome probabilities of one measurement.

All functions take a sequence of probabilities. Vectors off the simplex (any
entry outside [0, 1], or a sum differing from 1 by more than 1e-12) are
rejected, never renormalized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .config import TOL
from .errors import BitsModeRequiresPowerOfTwo, InvalidDistribution, NotBinary


def validate_probabilities(p: Sequence[float], tol: float = TOL.identity) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise InvalidDistribution("need at least two outcome probabilities")
    if not np.all(np.isfinite(a)):
        raise InvalidDistribution("probabilities must be finite")
    if np.any(a < -tol) or np.any(a > 1 + tol):
        raise InvalidDistribution(f"probabilities outside [0, 1]: {a.tolist()}")
    if abs(a.sum() - 1.0) > tol:
        raise InvalidDistribution(f"probabilities sum to {a.sum()!r}, not 1")
    return a


@dataclass(frozen=True)
class NormalizationScheme:
    """How the squared distance from the uniform vector is scaled.

    ``unit`` scales by n/(n-1) so the measure lies in [0, 1]. ``bits`` is only
    defined for n = 2**k and scales by 2**k * k / (2**k - 1), giving [0, k].
    The unit choice for n that is not a power of two is a convention of this
    package.
    """

    mode: str = "unit"

    def __post_init__(self):
        if self.mode not in ("unit", "bits"):
            raise ValueError(f"unknown normalization mode {self.mode!r}")

    def factor(self, n: int) -> float:
        if n < 2:
            raise InvalidDistribution("need at least two outcomes")
        if self.mode == "unit":
            return n / (n - 1)
        k = n.bit_length() - 1
        if 1 << k != n:
            raise BitsModeRequiresPowerOfTwo(f"bits mode needs a power-of-two outcome count, got n = {n}")
        return n * k / (n - 1)

    def maximum(self, n: int) -> float:
        return 1.0 if self.mode == "unit" else float(n.bit_length() - 1)


UNIT = NormalizationScheme("unit")
BITS = NormalizationScheme("bits")


def shannon_entropy(p: Sequence[float]) -> float:
    """Shannon entropy in bits, with 0 log 0 taken as 0."""
    a = validate_probabilities(p)
    nz = a[a > 0]
    return float(-np.sum(nz * np.log2(nz)) + 0.0)


def uncertainty(p: Sequence[float]) -> float:
    """Sum of p_j (1 - p_j), i.e. 1 - sum p_j**2."""
    a = validate_probabilities(p)
    return float(np.sum(a * (1.0 - a)))


def info_measure(p: Sequence[float], scheme: NormalizationScheme = UNIT) -> float:
    a = validate_probabilities(p)
    n = a.size
    return float(scheme.factor(n) * np.sum((a - 1.0 / n) ** 2))


def binary_info(p: Sequence[float]) -> tuple[float, float]:
    """Return ``(i, I)`` with i = p1 - p2 and I = i**2 for a two-outcome experiment."""
    a = validate_probabilities(p)
    if a.size != 2:
        raise NotBinary(f"binary measure needs 2 outcomes, got {a.size}")
    i = float(a[0] - a[1])
    return i, i * i


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def bits_capacity(n: int) -> int:
    """Number of bits k with n = 2**k."""
    if not is_power_of_two(n):
        raise BitsModeRequiresPowerOfTwo(f"{n} is not a power of two")
    return int(math.log2(n))
