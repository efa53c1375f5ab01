"""The Leavitt algebra L_F(1, m) as rectangular recurrent matrices.

``x_u y_v`` is the recurrent matrix built from the single unit at
``(decode u, decode v)`` in an ``n_|u| x n_|v|`` block.  An element is a finite
sum of such recurrent matrices, one block per standard degree.  Lifting a
block ``a`` at levels ``(t, s)`` means ``c`` diagonal copies of ``a``, landing
at ``(t', s')`` with ``n_t' = c n_t`` and ``n_s' = c n_s``.

On a homogeneous chain the degree of an ``(t, s)`` block is ``t - s``.  On a
general chain (the generalized algebra ``L_F(1, N)``) blocks are graded by the
ratio ``n_t / n_s`` instead, and products are only available when the aligned
blocks still land on chain levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import chain as ch
from . import core, linalg
from .chain import AdicWord, DivisorChain
from .core import CoreElement
from .errors import (
    ChainMismatch,
    DepthExceeded,
    FieldMismatch,
    NotDegreeZero,
    ParameterError,
)
from .field import QQ, Field


class LevelAlignment(DepthExceeded):
    kind = "LEVEL_ALIGNMENT"


@dataclass(frozen=True)
class RectBlock:
    row_level: int
    col_level: int
    entries: dict

    def key(self):
        return (self.row_level, self.col_level, frozenset(self.entries.items()))


def _search_limit(chain: DivisorChain, *levels) -> int:
    top = max(levels) + 2 * len(chain.radices) + 8
    return top if chain.depth is None else min(top, chain.depth)


def lift_rect(chain: DivisorChain, blk: RectBlock, t: int, s: int) -> RectBlock:
    nt, ns = chain.size(blk.row_level), chain.size(blk.col_level)
    c, rem = divmod(chain.size(t), nt)
    if rem or chain.size(s) != c * ns:
        raise LevelAlignment(f"({blk.row_level},{blk.col_level}) does not lift to ({t},{s})")
    entries = {
        (r + k * nt, col + k * ns): v for k in range(c) for (r, col), v in blk.entries.items()
    }
    return RectBlock(t, s, entries)


def _coarser_levels(chain: DivisorChain, t: int, s: int):
    """Candidate ``(t1, s1)`` below ``(t, s)`` that lift to it, coarsest first."""
    if chain.is_homogeneous:
        for k in range(min(t, s), 0, -1):
            yield t - k, s - k
        return
    nt, ns = chain.size(t), chain.size(s)
    for t1 in range(t):
        c, rem = divmod(nt, chain.size(t1))
        if rem or ns % c:
            continue
        s1 = chain.level_of_size(ns // c)
        if s1 is not None:
            yield t1, s1


def compress_rect(chain: DivisorChain, blk: RectBlock) -> RectBlock:
    """Smallest block whose diagonal repetition gives ``blk``."""
    entries = blk.entries
    for t1, s1 in _coarser_levels(chain, blk.row_level, blk.col_level):
        r0, c0 = chain.size(t1), chain.size(s1)
        copies = chain.size(blk.row_level) // r0
        base = {(r, c): v for (r, c), v in entries.items() if r < r0 and c < c0}
        if len(entries) != copies * len(base):
            continue
        if all(
            r // r0 == c // c0 and base.get((r % r0, c % c0)) == v
            for (r, c), v in entries.items()
        ):
            return RectBlock(t1, s1, base)
    return blk


class LeavittElement:
    __slots__ = ("chain", "field", "components")

    def __init__(self, chain: DivisorChain, field: Field, blocks):
        self.chain = chain
        self.field = field
        comps = {}
        for blk in blocks:
            entries = linalg.sp_clean(blk.entries)
            if not entries:
                continue
            blk = RectBlock(blk.row_level, blk.col_level, entries)
            key = _ratio(chain, blk)
            if key in comps:
                comps[key] = _add_blocks(chain, comps[key], blk)
                if not comps[key].entries:
                    del comps[key]
            else:
                comps[key] = compress_rect(chain, blk)
        self.components = dict(sorted(comps.items()))

    def key(self):
        return (self.chain, self.field.name, tuple((k, b.key()) for k, b in self.components.items()))

    def __eq__(self, other):
        if isinstance(other, LeavittElement):
            return self.key() == other.key()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other):
        return add(self, _coerce(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, _coerce(self, other).scale(-1))

    def __rsub__(self, other):
        return add(_coerce(self, other), self.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, LeavittElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ParameterError("negative powers are not defined")
        result = identity(self.chain, self.field)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c):
        c = self.field(c)
        return LeavittElement(
            self.chain,
            self.field,
            [RectBlock(b.row_level, b.col_level, linalg.sp_scale(b.entries, c)) for b in self.components.values()],
        )

    def terms(self):
        """``(u, v, coefficient)`` for every stored unit, grouped by degree."""
        out = []
        for b in self.components.values():
            for (r, c), v in sorted(b.entries.items()):
                out.append(
                    (ch.encode(r, b.row_level, self.chain), ch.encode(c, b.col_level, self.chain), v)
                )
        return out

    def __repr__(self):
        return f"LeavittElement({format_leavitt(self)!r})"

    def __str__(self):
        return format_leavitt(self)


def _ratio(chain: DivisorChain, blk: RectBlock):
    if chain.is_homogeneous:
        return blk.row_level - blk.col_level
    return Fraction(chain.size(blk.row_level), chain.size(blk.col_level))


def _add_blocks(chain, a: RectBlock, b: RectBlock) -> RectBlock:
    top = max(a.row_level, b.row_level)
    for t in range(top, _search_limit(chain, top, a.col_level, b.col_level) + 1):
        s = _col_for(chain, a, t)
        if s is None or _col_for(chain, b, t) != s:
            continue
        la, lb = lift_rect(chain, a, t, s), lift_rect(chain, b, t, s)
        return compress_rect(chain, RectBlock(t, s, linalg.sp_add(la.entries, lb.entries)))
    raise LevelAlignment("blocks of equal degree have no common chain level")


def _col_for(chain, blk: RectBlock, t: int) -> Optional[int]:
    """Column level reached when the rows of ``blk`` are lifted to level t."""
    c, rem = divmod(chain.size(t), chain.size(blk.row_level))
    if rem:
        return None
    return chain.level_of_size(c * chain.size(blk.col_level))


def _coerce(x: LeavittElement, other) -> LeavittElement:
    if isinstance(other, LeavittElement):
        return other
    return identity(x.chain, x.field).scale(other)


def _check(x, y):
    if x.chain != y.chain:
        raise ChainMismatch(f"chains {x.chain} and {y.chain} differ")
    if x.field != y.field:
        raise FieldMismatch(f"fields {x.field.name} and {y.field.name} differ")


def zero(chain: DivisorChain, field: Field = QQ) -> LeavittElement:
    return LeavittElement(chain, field, [])


def identity(chain: DivisorChain, field: Field = QQ) -> LeavittElement:
    return LeavittElement(chain, field, [RectBlock(0, 0, {(0, 0): field.one})])


def term(chain: DivisorChain, u, v, field: Field = QQ, coef=1) -> LeavittElement:
    """``coef * x_u y_v``."""
    u, v = ch.word(u), ch.word(v)
    chain.check_level(len(u))
    chain.check_level(len(v))
    entries = {(ch.decode(u, chain), ch.decode(v, chain)): field(coef)}
    return LeavittElement(chain, field, [RectBlock(len(u), len(v), entries)])


def gen_x(chain: DivisorChain, i: int, field: Field = QQ) -> LeavittElement:
    """``x_i``: the m x 1 unit column, degree +1."""
    if not 0 <= i < chain.radix(0):
        raise ParameterError(f"x{i} out of range for radix {chain.radix(0)}")
    return term(chain, AdicWord((i,)), ch.EMPTY, field)


def gen_y(chain: DivisorChain, i: int, field: Field = QQ) -> LeavittElement:
    """``y_i``: the 1 x m unit row, degree -1."""
    if not 0 <= i < chain.radix(0):
        raise ParameterError(f"y{i} out of range for radix {chain.radix(0)}")
    return term(chain, ch.EMPTY, AdicWord((i,)), field)


def add(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    _check(x, y)
    return LeavittElement(x.chain, x.field, list(x.components.values()) + list(y.components.values()))


def _align(chain, a: RectBlock, b: RectBlock):
    """Lift a and b so that a's column level equals b's row level."""
    s1, t2 = a.col_level, b.row_level
    for j in range(max(s1, t2), _search_limit(chain, a.row_level, s1, t2, b.col_level) + 1):
        nj = chain.size(j)
        if nj % chain.size(s1) or nj % chain.size(t2):
            continue
        t1 = chain.level_of_size(nj // chain.size(s1) * chain.size(a.row_level))
        s2 = chain.level_of_size(nj // chain.size(t2) * chain.size(b.col_level))
        if t1 is None or s2 is None:
            continue
        return lift_rect(chain, a, t1, j), lift_rect(chain, b, j, s2)
    raise LevelAlignment(
        f"blocks ({a.row_level},{a.col_level}) and ({b.row_level},{b.col_level}) "
        "cannot be aligned on chain levels"
    )


def mul(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    _check(x, y)
    blocks = []
    for a in x.components.values():
        for b in y.components.values():
            la, lb = _align(x.chain, a, b)
            blocks.append(RectBlock(la.row_level, lb.col_level, linalg.sp_mul(la.entries, lb.entries)))
    return LeavittElement(x.chain, x.field, blocks)


def term_mul(u, u1, w, w1, chain: Optional[DivisorChain] = None):
    """Symbolic ``x_u y_u1 * x_w y_w1`` as a word pair, or None for zero."""
    u, u1, w, w1 = map(ch.word, (u, u1, w, w1))
    v = ch.split_tail(u1, w)
    if v is not None:
        return (ch.concat_above(v, u, chain), w1)
    v = ch.split_tail(w, u1)
    if v is not None:
        return (u, ch.concat_above(v, w1, chain))
    return None


def to_core(x: LeavittElement) -> CoreElement:
    """The isomorphism of the degree-zero part onto M_{m^inf}(F)."""
    out = core.zero(x.chain, x.field)
    for b in x.components.values():
        if b.row_level != b.col_level:
            raise NotDegreeZero(f"component at levels ({b.row_level},{b.col_level}) is not of degree 0")
        out = out + core.CoreElement.make(x.chain, x.field, b.row_level, b.entries)
    return out


def from_core(y: CoreElement) -> LeavittElement:
    return LeavittElement(y.chain, y.field, [RectBlock(y.level, y.level, dict(y.entries))])


def degree_support(x: LeavittElement) -> set:
    return set(x.components)


def window(x: LeavittElement, rows: int, cols: int) -> dict:
    """Top-left ``rows x cols`` corner of the realized row- and column-finite matrix."""
    out = {}
    for b in x.components.values():
        nt, ns = x.chain.size(b.row_level), x.chain.size(b.col_level)
        k = 0
        while k * nt < rows and k * ns < cols:
            for (r, c), v in b.entries.items():
                i, j = k * nt + r, k * ns + c
                if i < rows and j < cols:
                    out[(i, j)] = out[(i, j)] + v if (i, j) in out else v
            k += 1
    return linalg.sp_clean(out)


def format_leavitt(x: LeavittElement) -> str:
    from .frontend.printing import format_linear_combination

    terms = []
    for u, v, c in x.terms():
        parts = ([f"x[{u}]"] if len(u) else []) + ([f"y[{v}]"] if len(v) else [])
        terms.append(("*".join(parts) or "1", c))
    return format_linear_combination(terms, x.field)
