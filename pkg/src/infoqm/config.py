"""Numerical tolerances shared by all modules."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    validation: float = 1e-10   # hermiticity, trace, positivity, unitarity checks
    identity: float = 1e-12     # arithmetic identities, simplex constraint
    zero_probability: float = 1e-12
    zero_field: float = 1e-14
    max_dim: int = 16


TOL = Tolerances()
