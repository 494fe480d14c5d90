"""Finite field arithmetic on integer labels.

Binary extension fields GF(2^t) label an element by the coefficient bitmask
of its polynomial representative; addition is XOR and multiplication is
shift-and-reduce against a fixed irreducible modulus.  Prime fields GF(p)
label elements by their residue and exist to support p-rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

# Pinned moduli so that every construction is bit-reproducible.
CANONICAL_MODULI = {
    1: 0b11,        # x + 1
    2: 0b111,       # x^2 + x + 1
    3: 0b1011,      # x^3 + x + 1
    4: 0b10011,     # x^4 + x + 1
    5: 0b100101,    # x^5 + x^2 + 1
    6: 0b1000011,   # x^6 + x + 1
}


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m, both GF(2)[x] bitmasks."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """True iff poly has no nontrivial factor over GF(2)."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    # trial division by every polynomial of degree 1..deg//2
    for d in range(1, deg // 2 + 1):
        for f in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, f) == 0:
                return False
    return True


def _clmul_reduce(a: int, b: int, modulus: int, degree: int) -> int:
    top = 1 << degree
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return out


@dataclass(frozen=True)
class Field:
    """A finite field with integer element labels ``0..order-1``."""

    kind: str  # "binary" or "prime"
    order: int
    degree: int = 1
    modulus_poly: int | None = None
    characteristic: int = field(default=2)

    @property
    def is_binary(self) -> bool:
        return self.kind == "binary"

    def elements(self) -> range:
        return range(self.order)

    def _check(self, *labels: int) -> None:
        for a in labels:
            if not 0 <= a < self.order:
                raise FieldError(f"label {a} out of range for field of order {self.order}")

    @cached_property
    def _mul_table(self) -> tuple[tuple[int, ...], ...] | None:
        if not self.is_binary or self.order > 256:
            return None
        return tuple(
            tuple(_clmul_reduce(a, b, self.modulus_poly, self.degree) for b in range(self.order))
            for a in range(self.order)
        )

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.is_binary:
            return a ^ b
        return (a + b) % self.order

    def neg(self, a: int) -> int:
        self._check(a)
        if self.is_binary:
            return a
        return (-a) % self.order

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if not self.is_binary:
            return (a * b) % self.order
        table = self._mul_table
        if table is not None:
            return table[a][b]
        return _clmul_reduce(a, b, self.modulus_poly, self.degree)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        # a^(order-2) by Lagrange
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(t-1)) of a binary field element."""
        if not self.is_binary:
            raise FieldError("trace is only defined here for binary extension fields")
        self._check(a)
        total, x = 0, a
        for _ in range(self.degree):
            total ^= x
            x = self.mul(x, x)
        return total

    def __repr__(self) -> str:
        if self.is_binary:
            return f"Field(GF(2^{self.degree}), modulus={self.modulus_poly:#b})"
        return f"Field(GF({self.order}))"


def field_create(*, degree: int | None = None, prime: int | None = None,
                 modulus: int | None = None) -> Field:
    """Build GF(2^degree) or GF(prime).

    The binary modulus defaults to the pinned polynomial for ``degree`` in 1..6;
    outside that range a modulus must be supplied.
    """
    if (degree is None) == (prime is None):
        raise FieldError("give exactly one of degree= or prime=")
    if prime is not None:
        if not is_prime(prime):
            raise FieldError(f"{prime} is not prime")
        return Field("prime", prime, 1, None, prime)
    if degree < 1:
        raise FieldError("degree must be >= 1")
    if modulus is None:
        if degree not in CANONICAL_MODULI:
            raise FieldError(f"no pinned modulus for degree {degree}; supply one")
        modulus = CANONICAL_MODULI[degree]
    if modulus.bit_length() - 1 != degree:
        raise FieldError(f"modulus {modulus:#b} does not have degree {degree}")
    if not is_irreducible_gf2(modulus):
        raise FieldError(f"modulus {modulus:#b} is reducible")
    return Field("binary", 1 << degree, degree, modulus, 2)


def binary_field_of_order(q: int) -> Field:
    if q < 2 or q & (q - 1):
        raise FieldError(f"{q} is not a power of two")
    return field_create(degree=q.bit_length() - 1)


def field_mul(F: Field, a: int, b: int) -> int:
    return F.mul(a, b)


def field_inv(F: Field, a: int) -> int:
    return F.inv(a)


def trace(F: Field, a: int) -> int:
    return F.trace(a)
