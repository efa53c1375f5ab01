"""Exact scalar fields: the rationals and prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field scalars
are :class:`Mod` instances.  Both support the usual operators, so matrix code
is written once against ``+``, ``*`` and ``== 0``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import FieldMismatch, ParameterError
from .snum import is_prime


class Mod:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Mod(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Mod(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for field descriptors; instances are callable coercions."""

    name = "?"

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero")
        return self.one / x

    def parse(self, text: str):
        """Scalar literal: ``"3"``, ``"-2"``, ``"3/4"``."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return self(int(num)) / self(int(den))
            return self(int(text))
        except ValueError:
            raise ParameterError(f"bad scalar literal {text!r}") from None

    def format(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"<field {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class Rationals(Field):
    name = "q"

    def __call__(self, x):
        if isinstance(x, Mod):
            raise FieldMismatch("prime-field scalar used over Q")
        return Fraction(x)

    def random(self, rng: random.Random, bound: int = 5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction))


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ParameterError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"

    def __call__(self, x):
        if isinstance(x, Mod):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} scalar used over F_{self.p}")
            return x
        if isinstance(x, Fraction):
            return Mod(x.numerator, self.p) / Mod(x.denominator, self.p)
        return Mod(int(x), self.p)

    def random(self, rng: random.Random, bound: int = 0):
        return Mod(rng.randrange(self.p), self.p)

    def elements(self):
        return [Mod(k, self.p) for k in range(self.p)]

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.p == self.p


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """``"q"`` or ``"fp:<p>"``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return QQ
    if text.startswith("fp:"):
        try:
            return PrimeField(int(text[3:]))
        except ValueError:
            pass
    raise ParameterError(f"unknown field {text!r}; use q or fp:<p>")
