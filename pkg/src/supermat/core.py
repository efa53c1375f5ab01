"""Elements of the supernatural matrix algebra M_N(F).

An element is an N-recurrent matrix ``a (+) a (+) ...``; it is stored as the
finite block ``a`` at the smallest chain level where it is defined.  Lifting one
level replaces ``a`` by ``m`` diagonal copies of itself, which on matrix units
reads ``e[w,w'] = sum_i e[iw, iw']``.

The module ``F^N`` (periodic sequences) is stored the same way, with the
stacking embedding ``v -> (v; v; ...; v)``.
"""

from __future__ import annotations

from typing import Optional

from . import chain as ch
from . import linalg
from .chain import AdicWord, DivisorChain
from .errors import (
    ChainMismatch,
    FieldMismatch,
    ParameterError,
    UnbalancedWords,
)
from .field import QQ, Field


def _check_same(x, y):
    if x.chain != y.chain:
        raise ChainMismatch(f"chains {x.chain} and {y.chain} differ")
    if x.field != y.field:
        raise FieldMismatch(f"fields {x.field.name} and {y.field.name} differ")


def lift_entries(chain: DivisorChain, entries: dict, level: int, target: int) -> dict:
    """Square block at ``level`` repeated diagonally up to ``target``."""
    chain.check_level(target)
    if target < level:
        raise ParameterError(f"cannot lift from level {level} down to {target}")
    for t in range(level, target):
        m, n = chain.radix(t), chain.size(t)
        entries = {
            (r + k * n, c + k * n): v for k in range(m) for (r, c), v in entries.items()
        }
    return entries


def _is_repetition(entries: dict, copies: int, n: int) -> Optional[dict]:
    """If ``entries`` is ``copies`` diagonal repeats of an n x n block, return that block."""
    base = {(r, c): v for (r, c), v in entries.items() if r < n and c < n}
    if len(entries) != copies * len(base):
        return None
    for (r, c), v in entries.items():
        if r // n != c // n or base.get((r % n, c % n)) != v:
            return None
    return base


def compress_entries(chain: DivisorChain, entries: dict, level: int):
    while level > 0:
        n = chain.size(level - 1)
        base = _is_repetition(entries, chain.radix(level - 1), n)
        if base is None:
            break
        entries, level = base, level - 1
    return entries, level


class CoreElement:
    """An element of M_N(F) held as a square block at some chain level.

    Instances produced by arithmetic are canonical (minimal level).  ``lift``
    deliberately returns a non-canonical instance; equality and hashing always
    go through the canonical form.
    """

    __slots__ = ("chain", "field", "level", "entries")

    def __init__(self, chain: DivisorChain, field: Field, level: int, entries: dict):
        chain.check_level(level)
        self.chain = chain
        self.field = field
        self.level = level
        self.entries = linalg.sp_clean(entries)

    @classmethod
    def make(cls, chain, field, level, entries) -> "CoreElement":
        entries, level = compress_entries(chain, linalg.sp_clean(entries), level)
        return cls(chain, field, level, entries)

    @property
    def size(self) -> int:
        return self.chain.size(self.level)

    def is_zero(self) -> bool:
        return not self.entries

    def is_canonical(self) -> bool:
        return compress_entries(self.chain, self.entries, self.level)[1] == self.level

    def block_at(self, t: int) -> dict:
        return lift_entries(self.chain, self.entries, self.level, t)

    def canonical(self) -> "CoreElement":
        if self.is_canonical():
            return self
        return CoreElement.make(self.chain, self.field, self.level, self.entries)

    def key(self):
        c = self.canonical()
        return (c.chain, c.field.name, c.level, frozenset(c.entries.items()))

    def __eq__(self, other):
        if isinstance(other, CoreElement):
            return self.key() == other.key()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        return add(self, _coerce(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, _coerce(self, other), sign=-1)

    def __rsub__(self, other):
        return add(_coerce(self, other), self, sign=-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, CoreElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ParameterError("negative powers are not defined")
        result = identity(self.chain, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "CoreElement":
        c = self.field(c)
        return CoreElement.make(
            self.chain, self.field, self.level, linalg.sp_scale(self.entries, c)
        )

    def terms(self):
        """``(u, v, coefficient)`` triples at the stored level, sorted by (row, col)."""
        t = self.level
        return [
            (ch.encode(r, t, self.chain), ch.encode(c, t, self.chain), v)
            for (r, c), v in sorted(self.entries.items())
        ]

    def __repr__(self):
        return f"CoreElement({format_element(self)!r}, chain={self.chain}, level={self.level})"

    def __str__(self):
        return format_element(self)


def _coerce(x: CoreElement, other) -> CoreElement:
    if isinstance(other, CoreElement):
        return other
    return identity(x.chain, x.field).scale(other)


def zero(chain: DivisorChain, field: Field = QQ) -> CoreElement:
    return CoreElement(chain, field, 0, {})


def identity(chain: DivisorChain, field: Field = QQ) -> CoreElement:
    return CoreElement(chain, field, 0, {(0, 0): field.one})


def unit(chain: DivisorChain, u, v, field: Field = QQ, coef=1) -> CoreElement:
    """The matrix unit ``e[u, v]`` (times ``coef``); u and v must have equal length."""
    u, v = ch.word(u), ch.word(v)
    if len(u) != len(v):
        raise UnbalancedWords(f"e[{u},{v}] needs words of equal length")
    chain.check_level(len(u))
    entries = {(ch.decode(u, chain), ch.decode(v, chain)): field(coef)}
    return CoreElement.make(chain, field, len(u), entries)


def from_block(chain: DivisorChain, level: int, entries: dict, field: Field = QQ) -> CoreElement:
    return CoreElement.make(chain, field, level, {k: field(v) for k, v in entries.items()})


def lift(x: CoreElement, t: int) -> CoreElement:
    """Same element represented at level ``t`` (not canonical)."""
    return CoreElement(x.chain, x.field, t, x.block_at(t))


def compress(x: CoreElement) -> CoreElement:
    return CoreElement.make(x.chain, x.field, x.level, x.entries)


def equal_at_common_level(x: CoreElement, y: CoreElement) -> bool:
    """Equality by lifting both blocks to a common level, bypassing canonical forms."""
    if x.chain != y.chain or x.field != y.field:
        return False
    t = max(x.level, y.level)
    return x.block_at(t) == y.block_at(t)


def add(x: CoreElement, y: CoreElement, sign=1) -> CoreElement:
    _check_same(x, y)
    t = max(x.level, y.level)
    return CoreElement.make(x.chain, x.field, t, linalg.sp_add(x.block_at(t), y.block_at(t), sign))


def mul(x: CoreElement, y: CoreElement) -> CoreElement:
    _check_same(x, y)
    t = max(x.level, y.level)
    return CoreElement.make(x.chain, x.field, t, linalg.sp_mul(x.block_at(t), y.block_at(t)))


def unit_mul(u, u1, w, w1):
    """Symbolic product ``e[u,u1] e[w,w1]``; returns the word pair of the result or None.

    ``w = v u1`` gives ``e[vu, w1]``; ``u1 = v w`` gives ``e[u, v w1]``.
    """
    u, u1, w, w1 = map(ch.word, (u, u1, w, w1))
    if len(u) != len(u1) or len(w) != len(w1):
        raise UnbalancedWords("unit_mul needs balanced generators")
    return _splice(u, u1, w, w1)


def _splice(u, u1, w, w1):
    v = ch.split_tail(u1, w)
    if v is not None:
        return (v.above(u), w1)
    v = ch.split_tail(w, u1)
    if v is not None:
        return (u, v.above(w1))
    return None


class ModuleVector:
    """A vector of ``F^N``: a length-``n_t`` block, stacked periodically."""

    __slots__ = ("chain", "field", "level", "entries")

    def __init__(self, chain: DivisorChain, field: Field, level: int, entries: dict):
        chain.check_level(level)
        self.chain = chain
        self.field = field
        self.level = level
        self.entries = {k: v for k, v in entries.items() if v != 0}

    @classmethod
    def make(cls, chain, field, level, entries) -> "ModuleVector":
        entries = {k: v for k, v in entries.items() if v != 0}
        while level > 0:
            n, m = chain.size(level - 1), chain.radix(level - 1)
            base = {k: v for k, v in entries.items() if k < n}
            if len(entries) != m * len(base) or any(base.get(k % n) != v for k, v in entries.items()):
                break
            entries, level = base, level - 1
        return cls(chain, field, level, entries)

    def block_at(self, t: int) -> dict:
        self.chain.check_level(t)
        entries = self.entries
        for s in range(self.level, t):
            m, n = self.chain.radix(s), self.chain.size(s)
            entries = {k + i * n: v for i in range(m) for k, v in entries.items()}
        return entries

    def is_zero(self) -> bool:
        return not self.entries

    def key(self):
        c = ModuleVector.make(self.chain, self.field, self.level, self.entries)
        return (c.chain, c.field.name, c.level, frozenset(c.entries.items()))

    def __eq__(self, other):
        if isinstance(other, ModuleVector):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        _check_same(self, other)
        t = max(self.level, other.level)
        a, b = self.block_at(t), other.block_at(t)
        out = dict(a)
        for k, v in b.items():
            out[k] = out[k] + v if k in out else v
        return ModuleVector.make(self.chain, self.field, t, out)

    def scale(self, c) -> "ModuleVector":
        c = self.field(c)
        return ModuleVector.make(
            self.chain, self.field, self.level, {k: c * v for k, v in self.entries.items()}
        )

    __rmul__ = scale

    def terms(self):
        return [(ch.encode(k, self.level, self.chain), v) for k, v in sorted(self.entries.items())]

    def __repr__(self):
        body = " + ".join(f"{v}*w[{w}]" for w, v in self.terms()) or "0"
        return f"ModuleVector({body!r}, level={self.level})"


def basis(chain: DivisorChain, w, field: Field = QQ, coef=1) -> ModuleVector:
    w = ch.word(w)
    chain.check_level(len(w))
    return ModuleVector.make(chain, field, len(w), {ch.decode(w, chain): field(coef)})


def lift_vector(v: ModuleVector, t: int) -> ModuleVector:
    return ModuleVector(v.chain, v.field, t, v.block_at(t))


def act(x: CoreElement, v: ModuleVector) -> ModuleVector:
    _check_same(x, v)
    t = max(x.level, v.level)
    return ModuleVector.make(x.chain, x.field, t, linalg.sp_matvec(x.block_at(t), v.block_at(t)))


def transitive_witness(v: ModuleVector, w: ModuleVector) -> CoreElement:
    """Some ``a`` with ``a v = w``; v must be nonzero."""
    _check_same(v, w)
    if v.is_zero():
        raise ParameterError("transitive_witness needs a nonzero source vector")
    if v == w:
        return identity(v.chain, v.field)
    t = max(v.level, w.level)
    vb, wb = v.block_at(t), w.block_at(t)
    j = min(vb)
    inv = v.field.inv(vb[j])
    entries = {(i, j): c * inv for i, c in wb.items()}
    return CoreElement.make(v.chain, v.field, t, entries)


def trace(x: CoreElement):
    return sum((v for (r, c), v in x.entries.items() if r == c), x.field.zero)


def normalized_trace(x: CoreElement):
    """``tr(block) / n_t``; unchanged by lifting.  Fails if char F divides n_t."""
    n = x.field(x.size)
    if n == 0:
        raise ZeroDivisionError(f"n_{x.level} = {x.size} vanishes in {x.field.name}")
    return trace(x) / n


def realize(x: CoreElement, blocks: int) -> list:
    """Dense ``blocks * n_t`` square window of the recurrent matrix."""
    if blocks < 1:
        raise ParameterError("blocks must be >= 1")
    n = x.size
    out = [[x.field.zero] * (n * blocks) for _ in range(n * blocks)]
    for b in range(blocks):
        for (r, c), v in x.entries.items():
            out[b * n + r][b * n + c] = v
    return out


def format_element(x: CoreElement, gen: str = "e") -> str:
    from .frontend.printing import format_linear_combination

    return format_linear_combination(
        [(f"{gen}[{u},{v}]", c) for u, v, c in x.terms()], x.field
    )
