"""Exact scalar arithmetic over the rationals and over odd prime fields.

Scalars are plain Python values: ``int`` residues in ``[0, p)`` for a prime
field, ``fractions.Fraction`` for the rationals.  A field object bundles the
coercions and the arithmetic that cannot be expressed as raw ``int``
operations (inverses, division).  Everything is exact; there is no floating
point anywhere in this package's arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "FieldError",
    "PrimeField",
    "RationalField",
    "QQ",
    "GF",
    "RandomSource",
    "is_prime",
]


class FieldError(ValueError):
    """Raised for invalid field parameters (composite or too-small primes)."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test, fine for n up to ~10^12."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime p >= 5.

    Characteristic 2 is excluded throughout (halves and quarters appear in
    the bivector normalization), and 3 is excluded because octonion
    derivation dimensions degenerate there.
    """

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.p < 5:
            raise FieldError(f"prime must be >= 5, got {self.p}")

    kind = "PrimeField"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def scalar(self, x):
        """Coerce an int or Fraction to a residue in [0, p)."""
        if isinstance(x, Fraction):
            return x.numerator % self.p * self.inv(x.denominator % self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def random_scalar(self, rng: "RandomSource"):
        return rng.randrange(self.p)

    def to_json(self):
        return {"kind": "PrimeField", "prime": self.p}

    def __repr__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers, with exact Fraction arithmetic."""

    kind = "Rationals"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0 in Q")
        return Fraction(a) / b

    def is_zero(self, a):
        return a == 0

    def random_scalar(self, rng: "RandomSource"):
        # Small integers keep rational arithmetic cheap and are generic with
        # high probability.
        return Fraction(rng.randint(-99, 99))

    def to_json(self):
        return {"kind": "Rationals"}

    def __repr__(self):
        return "QQ"


QQ = RationalField()

_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field F_p."""
    fld = _GF_CACHE.get(p)
    if fld is None:
        fld = PrimeField(p)
        _GF_CACHE[p] = fld
    return fld


class RandomSource:
    """Deterministic scalar stream.

    Identical seed and field give the identical sequence of scalars; this is
    the reproducibility contract every suite relies on.  Each trial of a
    genericity protocol gets its own stream via :meth:`child`.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._rng = random.Random(self.seed)

    def child(self, index: int) -> "RandomSource":
        """Stream for trial ``index``, derived as seed + index."""
        return RandomSource(self.seed + index)

    def randrange(self, n: int) -> int:
        return self._rng.randrange(n)

    def randint(self, a: int, b: int) -> int:
        return self._rng.randint(a, b)

    def scalar(self, field):
        return field.random_scalar(self)

    def scalars(self, field, count: int) -> list:
        return [field.random_scalar(self) for _ in range(count)]
