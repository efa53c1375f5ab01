"""The algebra T(F) = finite matrices + N-recurrent matrices.

Finite matrices form an ideal, so every product involving a finite part is
finite.  A finite-by-recurrent product only touches the rows/columns of the
recurrent part that meet the finite support, which are read off its block.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core, linalg
from .core import CoreElement
from .errors import ChainMismatch, FieldMismatch


@dataclass(frozen=True, eq=False)
class MixedElement:
    finite: dict
    recurrent: CoreElement

    def __post_init__(self):
        object.__setattr__(self, "finite", linalg.sp_clean(self.finite))
        object.__setattr__(self, "recurrent", self.recurrent.canonical())

    @property
    def chain(self):
        return self.recurrent.chain

    @property
    def field(self):
        return self.recurrent.field

    def key(self):
        return (frozenset(self.finite.items()), self.recurrent.key())

    def __eq__(self, other):
        if not isinstance(other, MixedElement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        return mixed_add(self, _coerce(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        return mixed_add(self, _coerce(self, other), sign=-1)

    def __rsub__(self, other):
        return mixed_add(_coerce(self, other), self, sign=-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, MixedElement):
            return mixed_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        result = mixed_identity(self.recurrent.chain, self.recurrent.field)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c):
        c = self.field(c)
        return MixedElement(linalg.sp_scale(self.finite, c), self.recurrent.scale(c))

    def window(self, size: int) -> dict:
        """Sparse entries of the top-left ``size x size`` corner."""
        n = self.recurrent.size
        out = {}
        for b in range(-(-size // n)):
            for (r, c), v in self.recurrent.entries.items():
                i, j = b * n + r, b * n + c
                if i < size and j < size:
                    out[(i, j)] = v
        for (i, j), v in self.finite.items():
            if i < size and j < size:
                out[(i, j)] = out.get((i, j), 0) + v
        return linalg.sp_clean(out)


def _coerce(x: MixedElement, other) -> MixedElement:
    if isinstance(other, MixedElement):
        return other
    return mixed_identity(x.chain, x.field).scale(other)


def _check(x: MixedElement, y: MixedElement):
    if x.chain != y.chain:
        raise ChainMismatch(f"chains {x.chain} and {y.chain} differ")
    if x.field != y.field:
        raise FieldMismatch(f"fields {x.field.name} and {y.field.name} differ")


def mixed_identity(chain, field) -> MixedElement:
    return MixedElement({}, core.identity(chain, field))


def finite_unit(chain, i: int, j: int, field, coef=1) -> MixedElement:
    return MixedElement({(i, j): field(coef)}, core.zero(chain, field))


def from_recurrent(x: CoreElement) -> MixedElement:
    return MixedElement({}, x)


def _finite_times_recurrent(f: dict, r: CoreElement) -> dict:
    n = r.size
    rows = {}
    for (a, b), v in r.entries.items():
        rows.setdefault(a, []).append((b, v))
    acc = {}
    for (i, k), v in f.items():
        blk, loc = divmod(k, n)
        for c, w in rows.get(loc, ()):
            key = (i, blk * n + c)
            acc[key] = acc[key] + v * w if key in acc else v * w
    return acc


def _recurrent_times_finite(r: CoreElement, f: dict) -> dict:
    n = r.size
    cols = {}
    for (a, b), v in r.entries.items():
        cols.setdefault(b, []).append((a, v))
    acc = {}
    for (k, j), w in f.items():
        blk, loc = divmod(k, n)
        for a, v in cols.get(loc, ()):
            key = (blk * n + a, j)
            acc[key] = acc[key] + v * w if key in acc else v * w
    return acc


def mixed_add(x: MixedElement, y: MixedElement, sign=1) -> MixedElement:
    _check(x, y)
    return MixedElement(
        linalg.sp_add(x.finite, y.finite, sign), core.add(x.recurrent, y.recurrent, sign)
    )


def mixed_mul(x: MixedElement, y: MixedElement) -> MixedElement:
    _check(x, y)
    fin = linalg.sp_mul(x.finite, y.finite)
    fin = linalg.sp_add(fin, _finite_times_recurrent(x.finite, y.recurrent))
    fin = linalg.sp_add(fin, _recurrent_times_finite(x.recurrent, y.finite))
    return MixedElement(fin, core.mul(x.recurrent, y.recurrent))


def format_mixed(x: MixedElement) -> str:
    from .frontend.printing import format_linear_combination

    terms = [(f"f[{i},{j}]", v) for (i, j), v in sorted(x.finite.items())]
    terms += [(f"e[{u},{v}]", c) for u, v, c in x.recurrent.terms()]
    return format_linear_combination(terms, x.field)
