"""Exact scalar fields: the rationals and prime fields F_p.

A :class:`Field` does arithmetic on *raw* values (``Fraction`` for the
rationals, ``int`` in ``[0, p)`` for F_p); the linear algebra layer works
on raw values directly for speed.  :class:`FieldElement` wraps a raw value
together with its field for the operator-overloaded scalar API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch

DEFAULT_PRIME = 1000003

RATIONALS = "Rationals"
PRIME_FIELD = "PrimeField"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Field:
    """A field spec: ``kind`` is RATIONALS or PRIME_FIELD."""

    kind: str
    characteristic: int

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == PRIME_FIELD:
            p = self.characteristic
            if p == 2 or not is_prime(p) or p >= 2**62:
                raise ValueError(f"{p} is not an odd prime below 2^62")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> Field:
        return cls(RATIONALS, 0)

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> Field:
        return cls(PRIME_FIELD, p)

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    def __str__(self):
        return "Q" if self.is_rational else f"F_{self.characteristic}"

    # raw-value arithmetic

    @property
    def zero(self):
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self):
        return Fraction(1) if self.is_rational else 1

    def normalize(self, value):
        """Canonical raw value for an int, Fraction or ``(num, den)`` pair."""
        if isinstance(value, FieldElement):
            self._check(value.field)
            return value.value
        if isinstance(value, tuple):
            num, den = value
            value = Fraction(num, den) if den else _raise_zero()
        if self.is_rational:
            if isinstance(value, float):
                raise TypeError("floating point values are not exact field elements")
            return Fraction(value)
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise TypeError(f"cannot interpret {value!r} as a field element")

    def add(self, a, b):
        return a + b if self.is_rational else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.is_rational else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.is_rational else a * b % self.characteristic

    def neg(self, a):
        return -a if self.is_rational else (-a) % self.characteristic

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.is_rational:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        """Parse a literal ``a``, ``-a`` or ``a/b``."""
        m = _RATIONAL_LITERAL.match(text)
        if not m:
            raise ValueError(f"not a rational literal: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise DivisionByZero("zero denominator in literal")
        return self.normalize(Fraction(num, den))

    def format(self, a) -> str:
        return str(a)

    def element(self, value) -> FieldElement:
        return FieldElement(self, self.normalize(value))

    def reduce_from(self, other: Field, value):
        """Map a raw value of ``other`` into this field (Q -> F_p reduction)."""
        if other == self:
            return value
        if other.is_rational:
            return self.normalize(value)
        raise FieldMismatch(f"no map from {other} to {self}")

    def _check(self, other: Field):
        if other != self:
            raise FieldMismatch(f"{other} vs {self}")


def _raise_zero():
    raise DivisionByZero("zero denominator")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.normalize(self.value))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.normalize(other)
        return NotImplemented

    def _wrap(self, raw):
        return FieldElement(self.field, raw)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.normalize(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field}, {self.value})"


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``F <p>`` or ``Fp:<p>``."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return Field.rationals()
    m = re.fullmatch(r"F(?:p:|\s+|_)(\d+)", t)
    if m:
        return Field.prime(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}")
