"""Arithmetic in GF(p**m) using the polynomial basis.

Elements are stored as coefficient tuples ``(c0, c1, ..., c_{m-1})`` meaning
``c0 + c1 x + ... + c_{m-1} x**(m-1)`` reduced modulo a fixed monic
irreducible polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

# Monic irreducible moduli, lowest degree coefficient first, leading 1 omitted.
# Only the small fields used for MUB construction are listed.
DEFAULT_MODULI = {
    (2, 1): (0,),
    (3, 1): (0,),
    (5, 1): (0,),
    (7, 1): (0,),
    (2, 2): (1, 1),      # x^2 + x + 1
    (2, 3): (1, 1, 0),   # x^3 + x + 1
    (3, 2): (1, 0),      # x^2 + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``n == p**m`` for prime p, else None."""
    if n < 2:
        return None
    p = 2
    while n % p:
        p += 1
    m, r = 0, n
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


class GaloisField:
    """The finite field with ``p**m`` elements."""

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p) or m < 1:
            raise ValueError(f"GF({p}^{m}) is not a field")
        if modulus is None:
            try:
                modulus = DEFAULT_MODULI[(p, m)]
            except KeyError:
                raise ValueError(f"no default modulus for GF({p}^{m})") from None
        if len(modulus) != m:
            raise ValueError("modulus must list m low-order coefficients")
        self.p = p
        self.m = m
        self.modulus = tuple(c % p for c in modulus)
        self.order = p**m

    def __repr__(self):
        return f"GaloisField({self.p}, {self.m})"

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def element(self, value) -> "GFElement":
        """Build an element from an int index (base-p digits) or a coefficient sequence."""
        if isinstance(value, GFElement):
            return value
        if isinstance(value, int):
            coeffs = []
            for _ in range(self.m):
                value, c = divmod(value, self.p)
                coeffs.append(c)
        else:
            coeffs = list(value)
            if len(coeffs) != self.m:
                raise ValueError(f"expected {self.m} coefficients")
        return GFElement(self, tuple(c % self.p for c in coeffs))

    @cached_property
    def elements(self) -> tuple["GFElement", ...]:
        return tuple(
            GFElement(self, tuple(reversed(c))) for c in product(range(self.p), repeat=self.m)
        )

    @property
    def zero(self) -> "GFElement":
        return GFElement(self, (0,) * self.m)

    @property
    def one(self) -> "GFElement":
        return GFElement(self, (1,) + (0,) * (self.m - 1))

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # x^m = -(modulus low-order part)
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j, mj in enumerate(self.modulus):
                    prod[k - m + j] = (prod[k - m + j] - c * mj) % p
        return tuple(prod[:m])


@dataclass(frozen=True)
class GFElement:
    field: GaloisField
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "GFElement":
        if isinstance(other, GFElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other
        if isinstance(other, int):
            return self.field.element((other,) + (0,) * (self.field.m - 1))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return GFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __int__(self):
        """Index of the element: coefficients read as base-p digits."""
        return sum(c * self.field.p**k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"GF{self.field.order}({int(self)})"

    def inverse(self) -> "GFElement":
        if not self:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        # Multiplicative group has order q - 1.
        return self ** (self.field.order - 2)

    def trace(self) -> int:
        """Absolute field trace y + y**p + ... + y**(p**(m-1)), an integer in [0, p)."""
        acc = self.field.zero
        y = self
        for _ in range(self.field.m):
            acc = acc + y
            y = y**self.field.p
        if any(acc.coeffs[1:]):
            raise ArithmeticError("trace left the prime subfield")
        return acc.coeffs[0]
