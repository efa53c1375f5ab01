"""Deep matrices: the free span of generators ``d[u, v]`` with the splicing product.

``d[u,u1] d[w,w1]`` is ``d[vu, w1]`` when ``w = v u1``, ``d[u, v w1]`` when
``u1 = v w``, and 0 otherwise.  Nothing else is imposed, so ``d[_,_]`` and
``sum_i d[i,i]`` are different elements here even though they act identically.

The "Frankenstein" action runs on left-infinite digit sequences that are zero
from some point on; such a sequence is stored as its finite part with leading
zeros stripped.
"""

from __future__ import annotations

from . import chain as ch
from . import core, leavitt, linalg
from .chain import AdicWord, DivisorChain
from .core import CoreElement
from .errors import ChainMismatch, FieldMismatch, UnbalancedOnGeneralChain, UnbalancedWords
from .field import QQ, Field


def _check(x, y):
    if x.chain != y.chain:
        raise ChainMismatch(f"chains {x.chain} and {y.chain} differ")
    if x.field != y.field:
        raise FieldMismatch(f"fields {x.field.name} and {y.field.name} differ")


class DeepElement:
    __slots__ = ("chain", "field", "terms")

    def __init__(self, chain: DivisorChain, field: Field, terms: dict):
        self.chain = chain
        self.field = field
        self.terms = {k: v for k, v in terms.items() if v != 0}

    def key(self):
        return (self.chain, self.field.name, frozenset(self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, DeepElement):
            return self.key() == other.key()
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.terms

    def is_balanced(self) -> bool:
        return all(len(u) == len(v) for u, v in self.terms)

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
        if isinstance(other, DeepElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        result = identity(self.chain, self.field)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c):
        c = self.field(c)
        return DeepElement(self.chain, self.field, {k: c * v for k, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), len(kv[0][1]), kv[0]))

    def __repr__(self):
        return f"DeepElement({format_deep(self)!r})"

    def __str__(self):
        return format_deep(self)


def _coerce(x: DeepElement, other) -> DeepElement:
    if isinstance(other, DeepElement):
        return other
    return identity(x.chain, x.field).scale(other)


def d_unit(chain: DivisorChain, u, v, field: Field = QQ, coef=1) -> DeepElement:
    u, v = ch.word(u), ch.word(v)
    if len(u) != len(v) and not chain.is_homogeneous:
        raise UnbalancedOnGeneralChain(f"d[{u},{v}] is unbalanced on the non-homogeneous chain {chain}")
    ch.validate(u, chain)
    ch.validate(v, chain)
    return DeepElement(chain, field, {(u, v): field(coef)})


def identity(chain: DivisorChain, field: Field = QQ) -> DeepElement:
    return DeepElement(chain, field, {(ch.EMPTY, ch.EMPTY): field.one})


def zero(chain: DivisorChain, field: Field = QQ) -> DeepElement:
    return DeepElement(chain, field, {})


def add(x: DeepElement, y: DeepElement, sign=1) -> DeepElement:
    _check(x, y)
    out = dict(x.terms)
    for k, v in y.terms.items():
        w = v if sign == 1 else -v
        out[k] = out[k] + w if k in out else w
    return DeepElement(x.chain, x.field, out)


def generator_product(u, u1, w, w1, chain: DivisorChain):
    return leavitt.term_mul(u, u1, w, w1, chain)


def mul(x: DeepElement, y: DeepElement) -> DeepElement:
    _check(x, y)
    out = {}
    for (u, u1), a in x.terms.items():
        for (w, w1), b in y.terms.items():
            r = generator_product(u, u1, w, w1, x.chain)
            if r is not None:
                out[r] = out[r] + a * b if r in out else a * b
    return DeepElement(x.chain, x.field, out)


class TailVector:
    """Finite combination of eventually-zero left-infinite sequences ``...000w``."""

    __slots__ = ("chain", "field", "terms")

    def __init__(self, chain: DivisorChain, field: Field, terms: dict):
        self.chain = chain
        self.field = field
        out = {}
        for w, v in terms.items():
            w = w.strip()
            out[w] = out[w] + v if w in out else v
        self.terms = {k: v for k, v in out.items() if v != 0}

    def key(self):
        return (self.chain, self.field.name, frozenset(self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, TailVector):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        _check(self, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TailVector(self.chain, self.field, out)

    def scale(self, c):
        c = self.field(c)
        return TailVector(self.chain, self.field, {k: c * v for k, v in self.terms.items()})

    def __repr__(self):
        body = " + ".join(f"{v}*w[{w}]" for w, v in sorted(self.terms.items())) or "0"
        return f"TailVector({body!r})"


def tail(chain: DivisorChain, w, field: Field = QQ, coef=1) -> TailVector:
    w = ch.validate(ch.word(w), chain)
    return TailVector(chain, field, {w: field(coef)})


def chop_and_sew(u: AdicWord, v: AdicWord, pi: AdicWord):
    """``eps[u,v]`` on the sequence ``...000 pi``: replace a trailing v by u, else None."""
    n = len(v)
    padded = pi.digits + (0,) * max(0, n - len(pi))
    if padded[:n] != v.digits:
        return None
    return AdicWord(u.digits + padded[n:]).strip()


def frankenstein_act(x: DeepElement, vec: TailVector) -> TailVector:
    _check(x, vec)
    if not x.chain.is_homogeneous and not x.is_balanced():
        raise UnbalancedOnGeneralChain("unbalanced generators cannot act on a non-homogeneous chain")
    out = {}
    for (u, v), a in x.terms.items():
        for pi, b in vec.terms.items():
            r = chop_and_sew(u, v, pi)
            if r is not None:
                out[r] = out[r] + a * b if r in out else a * b
    return TailVector(x.chain, x.field, out)


def to_leavitt(x: DeepElement) -> leavitt.LeavittElement:
    """``d[u,v] -> x_u y_v``."""
    if not x.chain.is_homogeneous and not x.is_balanced():
        raise UnbalancedOnGeneralChain("the Leavitt image needs a homogeneous chain")
    out = leavitt.zero(x.chain, x.field)
    for (u, v), a in x.terms.items():
        out = out + leavitt.term(x.chain, u, v, x.field, a)
    return out


def balanced_to_core(x: DeepElement) -> CoreElement:
    """``d[u,v] -> e[u,v]`` on balanced elements."""
    entries_by_level = {}
    for (u, v), a in x.terms.items():
        if len(u) != len(v):
            raise UnbalancedWords(f"d[{u},{v}] is not balanced")
        blk = entries_by_level.setdefault(len(u), {})
        key = (ch.decode(u, x.chain), ch.decode(v, x.chain))
        blk[key] = blk[key] + a if key in blk else a
    out = core.zero(x.chain, x.field)
    for t, blk in entries_by_level.items():
        out = out + core.CoreElement.make(x.chain, x.field, t, linalg.sp_clean(blk))
    return out


def format_deep(x: DeepElement) -> str:
    from .frontend.printing import format_linear_combination

    return format_linear_combination(
        [(f"d[{u},{v}]", c) for (u, v), c in x.sorted_terms()], x.field
    )
