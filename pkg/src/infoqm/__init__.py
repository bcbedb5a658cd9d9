"""Information-vector calculus for elementary quantum systems.

Probability-based information measures, the information (Bloch) vector and
its rotations, complete sets of mutually unbiased bases, two-qubit
correlation information, and information-vector dynamics. Each result is
paired with an independent density-matrix computation.
"""

from .errors import DomainError
from .infomeasure import BITS, UNIT, NormalizationScheme
from .mub import MubSet, mub_construct, verify_mub
from .qstate import DensityMatrix, InfoVector, density_from_info, info_from_density

__all__ = [
    "BITS",
    "UNIT",
    "DensityMatrix",
    "DomainError",
    "InfoVector",
    "MubSet",
    "NormalizationScheme",
    "density_from_info",
    "info_from_density",
    "mub_construct",
    "verify_mub",
]

__version__ = "0.1.0"
