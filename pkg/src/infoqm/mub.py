"""Complete sets of mutually unbiased bases (MUBs).

Supported dimensions are the prime powers 2, 3, 4, 5, 7, 8 and 9. Odd
dimensions use the quadratic-phase (character) construction over GF(n);
dimensions 2, 4 and 8 use joint eigenbases of commuting classes of
multi-qubit Pauli operators. Whatever the route, :func:`verify_mub` is the
judge of the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from .galois import GaloisField, prime_power
from .errors import UnsupportedDimension
from .matkernel import IDENTITY2, SIGMA_X, SIGMA_Z, hermitian_eigensystem

SUPPORTED_DIMS = (2, 3, 4, 5, 7, 8, 9)
CONSTRUCTION_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class MubSet:
    """``dim + 1`` bases, each an ``dim x dim`` matrix whose columns are the basis vectors."""

    dim: int
    bases: tuple

    def __post_init__(self):
        if len(self.bases) < 1:
            raise ValueError("a MUB set needs at least one basis")
        for b in self.bases:
            if np.shape(b) != (self.dim, self.dim):
                raise ValueError(f"basis shape {np.shape(b)} does not match dim {self.dim}")

    def __len__(self):
        return len(self.bases)

    def __iter__(self):
        return iter(self.bases)

    def rotated(self, u) -> "MubSet":
        """Apply the same unitary to every basis."""
        u = np.asarray(u, dtype=complex)
        return MubSet(self.dim, tuple(u @ b for b in self.bases))

    def replace(self, index: int, basis) -> "MubSet":
        bases = list(self.bases)
        bases[index] = np.asarray(basis, dtype=complex)
        return MubSet(self.dim, tuple(bases))


def verify_mub(mubs: MubSet) -> tuple[float, float]:
    """Return ``(max_orthonormality_error, max_unbiasedness_error)``.

    Orthonormality error is the max-norm of ``B^dag B - I`` over all bases;
    unbiasedness error is the largest ``| |<a_j|b_k>|^2 - 1/n |`` over all
    pairs of distinct bases.
    """
    n = mubs.dim
    eye = np.eye(n)
    ortho = 0.0
    for b in mubs.bases:
        ortho = max(ortho, float(np.max(np.abs(b.conj().T @ b - eye))))
    unbiased = 0.0
    for i, a in enumerate(mubs.bases):
        for b in mubs.bases[i + 1 :]:
            overlaps = np.abs(a.conj().T @ b) ** 2
            unbiased = max(unbiased, float(np.max(np.abs(overlaps - 1.0 / n))))
    return ortho, unbiased


def canonical_phases(basis: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Rotate each column so its first non-negligible component is real positive."""
    out = np.array(basis, dtype=complex)
    for k in range(out.shape[1]):
        col = out[:, k]
        lead = col[np.argmax(np.abs(col) > tol)]
        out[:, k] = col * (abs(lead) / lead)
    return out


def _odd_bases(p: int, m: int) -> list[np.ndarray]:
    gf = GaloisField(p, m)
    n = gf.order
    omega = np.exp(2j * np.pi / p)
    elems = gf.elements
    bases = []
    for a in elems:
        b = np.empty((n, n), dtype=complex)
        for k in elems:
            for x in elems:
                b[int(x), int(k)] = omega ** (a * x * x + k * x).trace()
        bases.append(b / math.sqrt(n))
    return bases


def _pauli_operator(x: tuple[int, ...], z: tuple[int, ...]) -> np.ndarray:
    """Hermitian Pauli product i^{x.z} X^x Z^z on len(x) qubits."""
    factors = []
    for xi, zi in zip(x, z):
        f = IDENTITY2
        if xi:
            f = SIGMA_X
        if zi:
            f = f @ SIGMA_Z
        factors.append(f)
    phase = 1j ** (sum(xi * zi for xi, zi in zip(x, z)) % 4)
    return phase * reduce(np.kron, factors)


def pauli_classes(m: int) -> list[list[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Partition the nontrivial m-qubit Pauli labels into 2**m + 1 commuting classes.

    A label is a pair (x, z) of bit vectors. The Z-only class comes first;
    class ``a`` for each a in GF(2**m) holds (x, M_a x) where M_a is the
    symmetric matrix of the trace form tr(a e_i e_j) in the polynomial basis.
    """
    n = 2**m
    gf = GaloisField(2, m)
    basis = [gf.element(1 << i) for i in range(m)]
    vecs = [tuple((v >> i) & 1 for i in range(m)) for v in range(1, n)]
    classes = [[((0,) * m, z) for z in vecs]]
    for a in gf.elements:
        mat = [[(a * ei * ej).trace() for ej in basis] for ei in basis]
        cls = []
        for x in vecs:
            z = tuple(sum(mat[r][c] * x[c] for c in range(m)) % 2 for r in range(m))
            cls.append((x, z))
        classes.append(cls)
    return classes


def _even_bases(m: int) -> list[np.ndarray]:
    bases = []
    unit = [tuple(int(i == k) for i in range(m)) for k in range(m)]
    for cls in pauli_classes(m)[1:]:
        labels = dict(cls)
        gens = [_pauli_operator(x, labels[x]) for x in unit]
        # distinct weights make the joint eigenspaces nondegenerate
        h = sum(2.0**k * g for k, g in enumerate(gens))
        _, v = hermitian_eigensystem(h)
        bases.append(v)
    return bases


@lru_cache(maxsize=None)
def _construct(n: int) -> MubSet:
    p, m = prime_power(n)
    bases = [np.eye(n, dtype=complex)]
    bases += _odd_bases(p, m) if p % 2 else _even_bases(m)
    bases = [canonical_phases(b) for b in bases]
    for b in bases:
        b.flags.writeable = False
    mubs = MubSet(n, tuple(bases))
    ortho, unbiased = verify_mub(mubs)
    if max(ortho, unbiased) >= CONSTRUCTION_TOL:
        raise ArithmeticError(
            f"MUB construction for n={n} failed verification ({ortho:.3g}, {unbiased:.3g})"
        )
    return mubs


def mub_construct(n: int) -> MubSet:
    """A verified complete set of n + 1 mutually unbiased bases in dimension n."""
    if n == 6:
        raise UnsupportedDimension(
            "no complete MUB set is known in dimension 6; "
            "whether one exists has not been proven for n=6 (open problem)"
        )
    if n not in SUPPORTED_DIMS:
        raise UnsupportedDimension(
            f"dimension {n} is not supported; choose one of {SUPPORTED_DIMS}"
        )
    return _construct(n)


def factor_prime_powers(n: int) -> list[int]:
    """Coprime prime-power factors of n in increasing prime order."""
    out, p = [], 2
    while n > 1:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    return out


@dataclass(frozen=True)
class ParamCount:
    factors: tuple[int, ...]
    local_params: tuple[int, ...]
    correlation_params: int
    total: int


def param_count_decomposition(n: int) -> ParamCount:
    """Split the n**2 - 1 state parameters into local and correlation parts.

    Each prime-power factor q contributes q**2 - 1 local parameters. The
    correlation count is the sum, over every subset of two or more factors,
    of the product of their local counts; for two factors this is the plain
    product. A single prime power has no correlation part.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    factors = tuple(factor_prime_powers(n))
    local = tuple(q * q - 1 for q in factors)
    # prod(1 + l_i) - 1 - sum(l_i) expands to the sum over subsets of size >= 2
    correlations = math.prod(1 + l for l in local) - 1 - sum(local)
    return ParamCount(factors, local, correlations, sum(local) + correlations)
