"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars over the rationals are plain ``int`` or ``fractions.Fraction``
values (Fraction keeps itself reduced with a positive denominator);
scalars over F_p are ints in ``[0, p)``.  All arithmetic routes through
a :class:`Field` so that modular reduction can never be forgotten.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import FieldMismatchError, SpecParseError

Scalar = Union[int, Fraction]

# Largest prime for which the int64 kernel fast paths are safe
# ((p-1)^2 * 24 < 2^63); larger primes fall back to object arithmetic.
MAX_FAST_PRIME = 46337


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


class Field:
    """The rationals (``p is None``) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None:
            if not is_prime(p):
                raise SpecParseError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> "Field":
        """Parse ``"Q"`` or ``"F:<p>"`` (also accepts ``"F<p>"``)."""
        s = spec.strip()
        if s.upper() in ("Q", "QQ", "RATIONALS"):
            return cls(None)
        body = None
        if s.upper().startswith("F:"):
            body = s[2:]
        elif s.upper().startswith("F"):
            body = s[1:]
        if body is not None:
            try:
                p = int(body)
            except ValueError:
                raise SpecParseError(f"bad field spec {spec!r}") from None
            return cls(p)
        raise SpecParseError(f"bad field spec {spec!r}")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    def spec(self) -> str:
        return "Q" if self.p is None else f"F:{self.p}"

    # -- element construction ------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def from_int(self, n: int) -> Scalar:
        return n if self.p is None else n % self.p

    def normalize(self, a: Scalar) -> Scalar:
        if self.p is None:
            if isinstance(a, Fraction) and a.denominator == 1:
                return int(a)
            return a
        return int(a) % self.p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            r = Fraction(1, 1) / Fraction(a)
            return int(r) if r.denominator == 1 else r
        a = a % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0 if self.p is None else a % self.p == 0

    # -- serialization -------------------------------------------------------

    def format_scalar(self, a: Scalar) -> str:
        """``"a/b"`` (reduced, b > 0) or ``"a"`` over Q; decimal residue over F_p."""
        if self.p is None:
            if isinstance(a, Fraction) and a.denominator != 1:
                return f"{a.numerator}/{a.denominator}"
            return str(int(a))
        return str(a % self.p)

    def parse_scalar(self, s: str) -> Scalar:
        s = s.strip()
        if self.p is None:
            if "/" in s:
                return self.normalize(Fraction(s))
            return int(s)
        v = int(s)
        if not 0 <= v < self.p:
            raise SpecParseError(f"residue {s!r} out of range [0, {self.p})")
        return v


def check_same_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a} vs {b}")


RATIONALS = Field.rationals()
GF2 = Field.prime(2)
GF3 = Field.prime(3)
