"""Exact ground fields: arbitrary-precision rationals and odd prime fields.

Every computation in this package runs over one fixed field, either
``RationalField()`` (elements are ``fractions.Fraction``, always in lowest
terms with positive denominator) or ``PrimeField(p)`` (elements are
``ModInt``).  Combining elements of different fields raises ``FieldMismatch``.

Scalars serialize as decimal strings, rationals as ``"num/den"`` with a
positive denominator (``"num"`` alone when the denominator is 1); the field
itself serializes as ``{"type": "rational"}`` or ``{"type": "prime", "p": p}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, ParamError

DEFAULT_PRIME = 10007

# Coefficient box for sampling random rational scalars.
RATIONAL_SAMPLE_BOX = 9


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any sensible modulus here."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class ModInt:
    """An element of F_p.  Treated as immutable; one modulus per computation."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise FieldMismatch(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModInt(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return ModInt(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModInt(self.value * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return ModInt(v * pow(self.value, self.p - 2, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return ModInt(1, self.p) / self ** (-e)
        return ModInt(pow(self.value, e, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.value, self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value == v % self.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self) -> str:
        return f"ModInt({self.value}, {self.p})"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a configured odd prime p (default 10007)."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 3 or self.p % 2 == 0 or not _is_prime(self.p):
            raise ParamError(f"prime field needs an odd prime, got {self.p}")

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    def zero(self) -> ModInt:
        return ModInt(0, self.p)

    def one(self) -> ModInt:
        return ModInt(1, self.p)

    def from_int(self, n: int) -> ModInt:
        return ModInt(n, self.p)

    def coerce(self, x) -> ModInt:
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise FieldMismatch(f"element of F_{x.p} used in F_{self.p}")
            return x
        if isinstance(x, int):
            return ModInt(x, self.p)
        raise FieldMismatch(f"cannot coerce {x!r} into F_{self.p}")

    def random(self, rng) -> ModInt:
        return ModInt(rng.randrange(self.p), self.p)

    def format_scalar(self, a: ModInt) -> str:
        return str(self.coerce(a).value)

    def parse_scalar(self, s: str) -> ModInt:
        return ModInt(int(s), self.p)

    def to_json(self) -> dict:
        return {"type": "prime", "p": self.p}


@dataclass(frozen=True)
class RationalField:
    """The rational numbers with arbitrary-precision exact arithmetic."""

    @property
    def name(self) -> str:
        return "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise FieldMismatch(f"cannot coerce {x!r} into Q")

    def random(self, rng) -> Fraction:
        return Fraction(rng.randint(-RATIONAL_SAMPLE_BOX, RATIONAL_SAMPLE_BOX))

    def format_scalar(self, a: Fraction) -> str:
        a = self.coerce(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse_scalar(self, s: str) -> Fraction:
        return Fraction(s)

    def to_json(self) -> dict:
        return {"type": "rational"}


def field_from_json(obj: dict):
    """Reconstruct a field from its JSON tag."""
    kind = obj.get("type")
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        return PrimeField(int(obj["p"]))
    raise ParamError(f"unknown field tag {obj!r}")


def field_of(scalar):
    """Recover the field an element belongs to."""
    if isinstance(scalar, Fraction):
        return RationalField()
    if isinstance(scalar, ModInt):
        return PrimeField(scalar.p)
    raise FieldMismatch(f"{scalar!r} is not a field element of this package")
