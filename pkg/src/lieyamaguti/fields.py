"""Exact scalar fields: the rationals and prime fields GF(p), p > 3.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
residues are :class:`Mod` instances, which carry their modulus so that
mixing two fields fails loudly instead of silently reducing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError, ManifestError


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) mixed with GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"GF({self.p}) mixed with QQ")
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> Mod:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Mod(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Field:
    """Field descriptor.  ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0:
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p <= 3:
                raise ValueError("characteristic must differ from 2 and 3")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else Mod(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else Mod(1, self.p)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, string, or element) into this field."""
        if self.p == 0:
            if isinstance(x, Mod):
                raise FieldMismatchError(f"GF({x.p}) element used over QQ")
            if isinstance(x, str):
                return self.parse(x)
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) element used over GF({self.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        return Mod(int(x), self.p)

    def owns(self, x) -> bool:
        if self.p == 0:
            return isinstance(x, (Fraction, int)) and not isinstance(x, bool)
        return isinstance(x, Mod) and x.p == self.p

    def parse(self, s: str):
        s = s.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise ManifestError(f"not a scalar: {s!r}")
        q = Fraction(s)
        return q if self.p == 0 else self(q)

    def format(self, x) -> str:
        x = self(x)
        if self.p == 0:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def encode(self, x):
        """JSON form: strings over QQ, integers over GF(p)."""
        return self.format(x) if self.p == 0 else self(x).v

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def from_string(cls, s: str) -> Field:
        s = s.strip()
        if s == "QQ":
            return QQ
        m = re.fullmatch(r"GF\((\d+)\)", s)
        if not m:
            raise ManifestError(f"unknown field descriptor {s!r}; use 'QQ' or 'GF(p)'")
        try:
            return cls(int(m.group(1)))
        except ValueError as exc:
            raise ManifestError(str(exc)) from None


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def field_of(values, default: Field | None = None) -> Field:
    """The common field of a collection of scalars.

    Plain ints are compatible with every field.  Raises
    FieldMismatchError on a mix.
    """
    found = None
    for x in values:
        if isinstance(x, Mod):
            f = Field(x.p)
        elif isinstance(x, Fraction):
            f = QQ
        elif isinstance(x, int):
            continue
        else:
            raise FieldMismatchError(f"not an exact scalar: {x!r}")
        if found is None:
            found = f
        elif f != found:
            raise FieldMismatchError(f"{found} mixed with {f}")
    if found is None:
        return default if default is not None else QQ
    if default is not None and found != default:
        raise FieldMismatchError(f"{found} mixed with {default}")
    return found
