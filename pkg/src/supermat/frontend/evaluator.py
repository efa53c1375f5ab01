"""Evaluation of parsed expressions in one algebra, fixed per session."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .. import chain as ch
from .. import core, deep, leavitt, mixed
from ..chain import DivisorChain, parse_chain
from ..errors import KindMismatch, ParameterError
from ..field import QQ, Field
from .parser import BinOp, Gen, Neg, Node, Num, Pow, parse

ALGEBRAS = ("core", "leavitt", "deep", "mixed")

# generator letters accepted by each algebra; "w" builds module vectors
_ALLOWED = {
    "core": {"e", "w"},
    "leavitt": {"x", "y"},
    "deep": {"d", "w"},
    "mixed": {"e", "f"},
}


@dataclass(frozen=True)
class SessionConfig:
    field: Field = QQ
    algebra: str = "core"
    chain: DivisorChain = dc_field(default_factory=lambda: parse_chain("2+repeat"))
    grading: Optional[object] = None

    def __post_init__(self):
        if self.algebra not in ALGEBRAS:
            raise ParameterError(f"unknown algebra {self.algebra!r}; expected one of {', '.join(ALGEBRAS)}")


def _is_scalar(v) -> bool:
    return not isinstance(
        v, (core.CoreElement, leavitt.LeavittElement, deep.DeepElement, mixed.MixedElement,
            core.ModuleVector, deep.TailVector)
    )


def _is_vector(v) -> bool:
    return isinstance(v, (core.ModuleVector, deep.TailVector))


def _generator(g: Gen, cfg: SessionConfig):
    if g.kind not in _ALLOWED[cfg.algebra]:
        raise KindMismatch(f"generator {g.kind!r} does not belong to the {cfg.algebra} algebra")
    chain, F = cfg.chain, cfg.field
    if g.kind == "e":
        u, v = g.args
        x = core.unit(chain, ch.validate(u, chain), ch.validate(v, chain), F)
        return mixed.from_recurrent(x) if cfg.algebra == "mixed" else x
    if g.kind == "d":
        return deep.d_unit(chain, *g.args, field=F)
    if g.kind == "f":
        return mixed.finite_unit(chain, g.args[0], g.args[1], F)
    if g.kind == "x":
        return leavitt.term(chain, g.args[0], ch.EMPTY, F)
    if g.kind == "y":
        return leavitt.term(chain, ch.EMPTY, g.args[0], F)
    w = g.args[0]
    if cfg.algebra == "deep":
        return deep.tail(chain, w, F)
    return core.basis(chain, ch.validate(w, chain), F)


def _add(a, b, sign, cfg):
    if _is_vector(a) or _is_vector(b):
        if _is_scalar(a) or _is_scalar(b):
            raise KindMismatch("cannot add a scalar to a vector")
        return a + (b if sign == 1 else b.scale(-1))
    if _is_scalar(a) and _is_scalar(b):
        return a + b if sign == 1 else a - b
    return a + b if sign == 1 else a - b


def _mul(a, b, cfg):
    if _is_scalar(a):
        return a * b if _is_scalar(b) else b.scale(a)
    if _is_scalar(b):
        return a.scale(b)
    if _is_vector(a):
        raise KindMismatch("a vector cannot multiply from the left")
    if _is_vector(b):
        if cfg.algebra == "deep":
            return deep.frankenstein_act(a, b)
        return core.act(a, b)
    return a * b


def _eval(node: Node, cfg: SessionConfig):
    if isinstance(node, Num):
        return cfg.field(node.num) / cfg.field(node.den)
    if isinstance(node, Gen):
        return _generator(node, cfg)
    if isinstance(node, Neg):
        v = _eval(node.operand, cfg)
        return -v if _is_scalar(v) else v.scale(-1)
    if isinstance(node, Pow):
        v = _eval(node.base, cfg)
        if _is_vector(v):
            raise KindMismatch("vectors have no powers")
        return v ** node.exponent
    a, b = _eval(node.left, cfg), _eval(node.right, cfg)
    if node.op == "*":
        return _mul(a, b, cfg)
    return _add(a, b, 1 if node.op == "+" else -1, cfg)


def identity(cfg: SessionConfig):
    return {
        "core": core.identity,
        "leavitt": leavitt.identity,
        "deep": deep.identity,
        "mixed": mixed.mixed_identity,
    }[cfg.algebra](cfg.chain, cfg.field)


def evaluate(expr, cfg: SessionConfig):
    """Evaluate to an algebra element (scalars become multiples of 1) or a module vector."""
    node = parse(expr) if isinstance(expr, str) else expr
    value = _eval(node, cfg)
    if _is_scalar(value):
        return identity(cfg).scale(value)
    if isinstance(value, core.CoreElement):
        return value.canonical()
    return value


def evaluate_vector(expr, cfg: SessionConfig):
    value = evaluate(expr, cfg)
    if not _is_vector(value):
        raise KindMismatch("expected a vector expression built from w[...] generators")
    return value


def evaluate_element(expr, cfg: SessionConfig):
    value = evaluate(expr, cfg)
    if _is_vector(value):
        raise KindMismatch("expected an algebra element, got a vector")
    return value
