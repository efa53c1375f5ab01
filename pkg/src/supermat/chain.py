"""Divisor chains and mixed-radix index words.

A chain ``1 = n_0 | n_1 | n_2 | ...`` is given by its radices
``m_t = n_t / n_{t-1}``.  Word position ``i`` (0-based, least significant first)
has radix ``m_{i+1}``, so a word of length t indexes ``0 .. n_t - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from . import snum
from .errors import DepthExceeded, InvalidWord, ParameterError, RadixMismatch

REPEAT_POLICIES = (None, "last", "pattern")


@dataclass(frozen=True)
class DivisorChain:
    radices: tuple
    repeat: Optional[str] = None

    def __post_init__(self):
        radices = tuple(int(m) for m in self.radices)
        if not radices:
            raise ParameterError("a chain needs at least one radix")
        if any(m < 2 for m in radices):
            raise ParameterError(f"radices must be >= 2, got {list(radices)}")
        if self.repeat not in REPEAT_POLICIES:
            raise ParameterError(f"unknown repeat policy {self.repeat!r}")
        object.__setattr__(self, "radices", radices)

    @classmethod
    def homogeneous(cls, m: int) -> "DivisorChain":
        return cls((m,), "last")

    @property
    def depth(self) -> Optional[int]:
        """Number of available levels beyond 0; ``None`` when unbounded."""
        return None if self.repeat else len(self.radices)

    def check_level(self, t: int):
        if t < 0:
            raise ParameterError(f"negative level {t}")
        if self.repeat is None and t > len(self.radices):
            raise DepthExceeded(f"level {t} exceeds chain depth {len(self.radices)}")

    def radix(self, position: int) -> int:
        """Radix of word position ``position`` (that is, ``m_{position+1}``)."""
        if position < len(self.radices):
            return self.radices[position]
        if self.repeat == "last":
            return self.radices[-1]
        if self.repeat == "pattern":
            return self.radices[position % len(self.radices)]
        raise DepthExceeded(f"position {position} exceeds chain depth {len(self.radices)}")

    def size(self, t: int) -> int:
        """``n_t``."""
        self.check_level(t)
        return math.prod(self.radix(i) for i in range(t))

    def level_of_size(self, n: int) -> Optional[int]:
        t, size = 0, 1
        while size < n:
            if self.depth is not None and t >= self.depth:
                return None
            size *= self.radix(t)
            t += 1
        return t if size == n else None

    @cached_property
    def is_homogeneous(self) -> bool:
        return len(set(self.radices)) == 1

    @property
    def m(self) -> int:
        if not self.is_homogeneous:
            raise ParameterError(f"chain {self} is not homogeneous")
        return self.radices[0]

    def degree(self) -> snum.SupernaturalNumber:
        """The supernatural number realized by the chain."""
        if self.repeat == "last":
            fin = math.prod(self.radices[:-1])
            return snum.mul(fin, snum.infinite_power(self.radices[-1]))
        if self.repeat == "pattern":
            return snum.infinite_power(math.prod(self.radices))
        return snum.from_natural(math.prod(self.radices))

    def __str__(self):
        return format_chain(self)


def parse_chain(text: str) -> DivisorChain:
    """``"2,3,4"``, ``"2,3+repeat"`` (cyclic) or ``"2,3+last"`` (repeat last radix)."""
    text = text.replace(" ", "")
    repeat = None
    if "+" in text:
        text, policy = text.split("+", 1)
        repeat = {"repeat": "pattern", "pattern": "pattern", "last": "last"}.get(policy)
        if repeat is None:
            raise ParameterError(f"unknown chain suffix +{policy}")
    try:
        radices = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParameterError(f"bad chain literal {text!r}") from None
    if repeat == "pattern" and len(set(radices)) == 1:
        repeat = "last"
    return DivisorChain(radices, repeat)


def format_chain(chain: DivisorChain) -> str:
    body = ",".join(map(str, chain.radices))
    if chain.repeat == "pattern":
        return body + "+repeat"
    if chain.repeat == "last":
        return body + ("+repeat" if len(chain.radices) == 1 else "+last")
    return body


@dataclass(frozen=True, order=True)
class AdicWord:
    """Digits ``k_0, k_1, ...`` stored least significant first.

    Leading zeros are significant: ``"0.1"`` and ``"1"`` are different words.
    """

    digits: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if any(d < 0 for d in self.digits):
            raise InvalidWord(f"negative digit in {self.digits}")

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"AdicWord({format_word(self)!r})"

    def above(self, low: "AdicWord") -> "AdicWord":
        """The concatenation ``self`` followed by ``low`` (``low`` keeps the low positions)."""
        return AdicWord(low.digits + self.digits)

    def strip(self) -> "AdicWord":
        """Drop leading (most significant) zero digits."""
        d = self.digits
        k = len(d)
        while k and d[k - 1] == 0:
            k -= 1
        return AdicWord(d[:k])


EMPTY = AdicWord(())


def word(text) -> AdicWord:
    if isinstance(text, AdicWord):
        return text
    return parse_word(text)


def parse_word(text: str) -> AdicWord:
    """``"1.2.1"`` (most significant first) or ``"_"`` for the empty word."""
    text = text.strip()
    if text in ("_", ""):
        return EMPTY
    try:
        return AdicWord(tuple(int(x) for x in reversed(text.split("."))))
    except ValueError:
        raise InvalidWord(f"bad word literal {text!r}") from None


def format_word(w: AdicWord) -> str:
    if not w.digits:
        return "_"
    return ".".join(str(d) for d in reversed(w.digits))


def validate(w: AdicWord, chain: DivisorChain, offset: int = 0) -> AdicWord:
    """Check digit bounds when ``w`` is placed starting at position ``offset``."""
    for i, d in enumerate(w.digits):
        r = chain.radix(offset + i)
        if d >= r:
            if offset:
                raise RadixMismatch(f"digit {d} at position {offset + i} exceeds radix {r}")
            raise InvalidWord(f"digit {d} at position {i} of {w} exceeds radix {r}")
    return w


def encode(k: int, t: int, chain: DivisorChain) -> AdicWord:
    chain.check_level(t)
    if k < 0 or k >= chain.size(t):
        raise ParameterError(f"{k} is out of range for length {t} (n_t = {chain.size(t)})")
    digits = []
    for i in range(t):
        k, d = divmod(k, chain.radix(i))
        digits.append(d)
    return AdicWord(tuple(digits))


def decode(w: AdicWord, chain: DivisorChain) -> int:
    validate(w, chain)
    k, place = 0, 1
    for i, d in enumerate(w.digits):
        k += d * place
        place *= chain.radix(i)
    return k


def all_words(t: int, chain: DivisorChain):
    n = chain.size(t)
    return [encode(k, t, chain) for k in range(n)]


def split_tail(tail: AdicWord, w: AdicWord) -> Optional[AdicWord]:
    """Return v with ``w = v tail`` (tail in the low positions), else None."""
    n = len(tail)
    if len(w) < n or w.digits[:n] != tail.digits:
        return None
    return AdicWord(w.digits[n:])


def concat_above(v: AdicWord, u: AdicWord, chain: Optional[DivisorChain] = None) -> AdicWord:
    """The word ``vu``: v shifted to positions ``|u|, |u|+1, ...``."""
    if chain is not None:
        validate(v, chain, offset=len(u))
    return v.above(u)
