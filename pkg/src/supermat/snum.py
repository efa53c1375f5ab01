"""Supernatural (Steinitz) numbers.

A supernatural number is a formal product ``prod p**a_p`` where each exponent
is a non-negative integer or infinity and only finitely many exponents are
nonzero.  Infinite exponents are stored as ``INF`` (a float infinity), which
gives saturating addition and ordering against ints for free.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import ParameterError

INF = math.inf

Exponent = Union[int, float]


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


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer."""
    if n < 1:
        raise ParameterError(f"cannot factor {n}: need a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class SupernaturalNumber:
    exponents: Mapping[int, Exponent] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, a in self.exponents.items():
            if not is_prime(p):
                raise ParameterError(f"{p} is not prime")
            if a == INF:
                clean[p] = INF
            elif a < 0 or int(a) != a:
                raise ParameterError(f"bad exponent {a!r} for prime {p}")
            elif a > 0:
                clean[p] = int(a)
        object.__setattr__(self, "exponents", dict(sorted(clean.items())))

    def __hash__(self):
        return hash(tuple(self.exponents.items()))

    def __eq__(self, other):
        if not isinstance(other, SupernaturalNumber):
            return NotImplemented
        return self.exponents == other.exponents

    def exponent(self, p: int) -> Exponent:
        return self.exponents.get(p, 0)

    @property
    def primes(self):
        return tuple(self.exponents)

    def is_finite(self) -> bool:
        return all(a != INF for a in self.exponents.values())

    def __int__(self):
        if not self.is_finite():
            raise ParameterError(f"{self} is not a natural number")
        return math.prod(p**a for p, a in self.exponents.items())

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __str__(self):
        return format_snum(self)

    def __repr__(self):
        return f"SupernaturalNumber({format_snum(self)!r})"


def _coerce(x) -> SupernaturalNumber:
    if isinstance(x, SupernaturalNumber):
        return x
    if isinstance(x, int):
        return from_natural(x)
    if isinstance(x, str):
        return parse_snum(x)
    raise TypeError(f"cannot interpret {x!r} as a supernatural number")


def from_natural(n: int) -> SupernaturalNumber:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError(f"need a positive integer, got {n!r}")
    return SupernaturalNumber(factorize(n))


def infinite_power(n: int) -> SupernaturalNumber:
    """``n^inf``: every prime dividing n raised to infinity."""
    return SupernaturalNumber({p: INF for p in factorize(n)})


def mul(a, b) -> SupernaturalNumber:
    a, b = _coerce(a), _coerce(b)
    out = dict(a.exponents)
    for p, e in b.exponents.items():
        out[p] = out.get(p, 0) + e
    return SupernaturalNumber(out)


def lcm(a, b) -> SupernaturalNumber:
    a, b = _coerce(a), _coerce(b)
    primes = set(a.exponents) | set(b.exponents)
    return SupernaturalNumber({p: max(a.exponent(p), b.exponent(p)) for p in primes})


def gcd(a, b) -> SupernaturalNumber:
    a, b = _coerce(a), _coerce(b)
    primes = set(a.exponents) & set(b.exponents)
    return SupernaturalNumber({p: min(a.exponent(p), b.exponent(p)) for p in primes})


def divides(a, b) -> bool:
    a, b = _coerce(a), _coerce(b)
    return all(e <= b.exponent(p) for p, e in a.exponents.items())


def tensor_absorbs(n: int, big) -> bool:
    """Whether ``M_n(F) (x) M_N(F) = M_N(F)``, i.e. ``n^inf`` divides N."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError(f"need a positive integer, got {n!r}")
    return divides(infinite_power(n), _coerce(big))


def is_locally_finite(a) -> bool:
    return _coerce(a).is_finite()


def primary_component(a, p: int) -> SupernaturalNumber:
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    a = _coerce(a)
    return SupernaturalNumber({p: a.exponent(p)} if p in a.exponents else {})


_FACTOR = re.compile(r"^(\d+)(?:\^(\d+|inf))?$")


def parse_snum(text: str) -> SupernaturalNumber:
    """Parse ``"2^inf*3^2*5"``; ``"1"`` is the empty product.

    Factors may repeat or be composite (``"6*4"``); exponents of equal primes add.
    """
    text = text.replace(" ", "")
    if not text:
        raise ParameterError("empty supernatural number")
    out = SupernaturalNumber({})
    for part in text.split("*"):
        m = _FACTOR.match(part)
        if not m:
            raise ParameterError(f"bad factor {part!r} in {text!r}")
        base = int(m.group(1))
        if base < 1:
            raise ParameterError(f"bad factor {part!r} in {text!r}")
        e = m.group(2)
        if e == "inf":
            if base == 1:
                continue
            out = mul(out, infinite_power(base))
        else:
            k = 1 if e is None else int(e)
            out = mul(out, SupernaturalNumber({p: a * k for p, a in factorize(base).items()}))
    return out


def format_snum(a: SupernaturalNumber) -> str:
    if not a.exponents:
        return "1"
    parts = []
    for p, e in a.exponents.items():
        if e == INF:
            parts.append(f"{p}^inf")
        elif e == 1:
            parts.append(str(p))
        else:
            parts.append(f"{p}^{e}")
    return "*".join(parts)
