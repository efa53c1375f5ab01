"""Elementary group gradings of M_N(F) and letter gradings of L_F(1, m).

Groups are finitely generated abelian, ``Z^r x Z/q_1 x ... x Z/q_k``, with
elements as integer tuples reduced modulo the torsion orders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import chain as ch
from . import core, leavitt
from .chain import DivisorChain
from .core import CoreElement
from .errors import DepthExceeded, ParameterError, UnbalancedWords
from .leavitt import LeavittElement


@dataclass(frozen=True)
class AbelianGroup:
    rank: int = 1
    torsion: tuple = ()

    def __post_init__(self):
        if self.rank < 0 or any(q < 2 for q in self.torsion):
            raise ParameterError(f"bad group Z^{self.rank} x {self.torsion}")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @property
    def width(self) -> int:
        return self.rank + len(self.torsion)

    def element(self, values) -> tuple:
        if isinstance(values, int):
            values = (values,)
        values = tuple(int(v) for v in values)
        if len(values) != self.width:
            raise ParameterError(f"{values} is not an element of {self}")
        free = values[: self.rank]
        tors = tuple(v % q for v, q in zip(values[self.rank :], self.torsion))
        return free + tors

    @property
    def zero(self) -> tuple:
        return (0,) * self.width

    def add(self, a, b):
        return self.element(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a):
        return self.element(tuple(-x for x in a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def sum(self, items):
        out = self.zero
        for g in items:
            out = self.add(out, g)
        return out

    def format(self, g) -> str:
        return str(g[0]) if self.width == 1 else "(" + ",".join(map(str, g)) + ")"

    def parse_element(self, text: str) -> tuple:
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        try:
            return self.element(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise ParameterError(f"bad group element {text!r}") from None

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z/{q}" for q in self.torsion]
        return "x".join(parts) or "0"


def parse_group(text: str) -> AbelianGroup:
    """``"Z"``, ``"Z^2"``, ``"Z/3"``, ``"Z^2xZ/4"``."""
    rank, torsion = 0, []
    for part in text.replace(" ", "").split("x"):
        m = re.fullmatch(r"Z(?:\^(\d+))?", part)
        if m:
            rank += int(m.group(1) or 1)
            continue
        m = re.fullmatch(r"Z/(\d+)", part)
        if m:
            torsion.append(int(m.group(1)))
            continue
        raise ParameterError(f"bad group literal {text!r}")
    return AbelianGroup(rank, tuple(torsion))


def _split_top(text: str, sep: str):
    """Split on ``sep`` outside parentheses."""
    out, depth, cur = [], 0, ""
    for chr_ in text:
        if chr_ == "(":
            depth += 1
        elif chr_ == ")":
            depth -= 1
        if chr_ == sep and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += chr_
    out.append(cur)
    return out


@dataclass(frozen=True)
class ElementaryGrading:
    """``h[t][j]``: the group element attached to digit j at word position t."""

    chain: DivisorChain
    group: AbelianGroup
    h: tuple

    def __post_init__(self):
        rows = []
        for t, row in enumerate(self.h):
            if len(row) != self.chain.radix(t):
                raise ParameterError(
                    f"level {t} needs {self.chain.radix(t)} group elements, got {len(row)}"
                )
            rows.append(tuple(self.group.element(g) for g in row))
        object.__setattr__(self, "h", tuple(rows))

    @property
    def depth(self) -> int:
        return len(self.h)

    def word_degree(self, w) -> tuple:
        """``g_w = h[0][w_0] + ... + h[t-1][w_(t-1)]``."""
        if len(w) > self.depth:
            raise DepthExceeded(f"word of length {len(w)} exceeds grading depth {self.depth}")
        return self.group.sum(self.h[t][d] for t, d in enumerate(w.digits))


def parse_h(text: str, chain: DivisorChain, group: AbelianGroup) -> ElementaryGrading:
    """``"0:1,2;1:0,5"``: level t, then its group elements.  Levels must be 0..T-1."""
    levels = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        t, _, body = part.partition(":")
        levels[int(t)] = [group.parse_element(g) for g in _split_top(body, ",")]
    if sorted(levels) != list(range(len(levels))):
        raise ParameterError("h must list levels 0, 1, ..., T-1")
    return ElementaryGrading(chain, group, tuple(levels[t] for t in range(len(levels))))


def unit_degree(u, u1, grading: ElementaryGrading) -> tuple:
    u, u1 = ch.word(u), ch.word(u1)
    if len(u) != len(u1):
        raise UnbalancedWords(f"e[{u},{u1}] needs words of equal length")
    return grading.group.sub(grading.word_degree(u), grading.word_degree(u1))


def _entry_degrees(x: CoreElement, grading: ElementaryGrading) -> dict:
    if x.level > grading.depth:
        raise DepthExceeded(f"element at level {x.level} exceeds grading depth {grading.depth}")
    out = {}
    for (r, c), v in x.entries.items():
        g = unit_degree(ch.encode(r, x.level, x.chain), ch.encode(c, x.level, x.chain), grading)
        out.setdefault(g, {})[(r, c)] = v
    return out


def components(x: CoreElement, grading: ElementaryGrading) -> dict:
    """Homogeneous components, keyed by degree; they sum to x."""
    return {
        g: core.CoreElement.make(x.chain, x.field, x.level, blk)
        for g, blk in sorted(_entry_degrees(x, grading).items())
    }


def component(x: CoreElement, grading: ElementaryGrading, g) -> CoreElement:
    g = grading.group.element(g)
    return components(x, grading).get(g, core.zero(x.chain, x.field))


def is_homogeneous(x: CoreElement, grading: ElementaryGrading):
    """The degree of x if it is homogeneous, else None.  Zero counts as degree 0."""
    degs = _entry_degrees(x, grading)
    if not degs:
        return grading.group.zero
    if len(degs) == 1:
        return next(iter(degs))
    return None


def leavitt_degree(u, v, assignment, group: AbelianGroup) -> tuple:
    """``deg(x_u y_v)`` with ``deg x_i = g_i`` and ``deg y_i = -g_i``."""
    u, v = ch.word(u), ch.word(v)
    g = [group.element(a) for a in assignment]
    return group.sub(group.sum(g[d] for d in u.digits), group.sum(g[d] for d in v.digits))


def leavitt_components(x: LeavittElement, assignment, group: AbelianGroup) -> dict:
    if not x.chain.is_homogeneous:
        raise ParameterError("letter gradings need a homogeneous chain")
    if len(assignment) != x.chain.m:
        raise ParameterError(f"need {x.chain.m} letter degrees, got {len(assignment)}")
    out = {}
    for u, v, c in x.terms():
        g = leavitt_degree(u, v, assignment, group)
        out.setdefault(g, []).append(leavitt.term(x.chain, u, v, x.field, c))
    result = {}
    for g, parts in sorted(out.items()):
        acc = leavitt.zero(x.chain, x.field)
        for p in parts:
            acc = acc + p
        result[g] = acc
    return result


def leavitt_component(x: LeavittElement, assignment, group: AbelianGroup, g) -> LeavittElement:
    g = group.element(g)
    return leavitt_components(x, assignment, group).get(g, leavitt.zero(x.chain, x.field))


def leavitt_is_homogeneous(x: LeavittElement, assignment, group: AbelianGroup):
    comps = leavitt_components(x, assignment, group)
    if not comps:
        return group.zero
    return next(iter(comps)) if len(comps) == 1 else None
