"""Versioned JSON dumps of elements, vectors and matrices.

Every document carries ``"schema": 1``.  Scalars are strings (``"3/4"``,
``"2"``) so rationals survive the round trip; entries are sorted by (row, col).
"""

from __future__ import annotations

import json

from .. import core, deep, leavitt, mixed
from ..chain import format_chain, parse_chain, parse_word
from ..errors import KindMismatch, ParameterError
from ..field import parse_field
from .printing import format_scalar

SCHEMA = 1


def scalar(c) -> str:
    return format_scalar(c)


def _entries(d: dict) -> list:
    return [[r, c, scalar(v)] for (r, c), v in sorted(d.items())]


def _header(kind, chain, field) -> dict:
    return {"schema": SCHEMA, "kind": kind, "field": field.name, "chain": format_chain(chain)}


def to_dict(x) -> dict:
    if isinstance(x, core.CoreElement):
        x = x.canonical()
        out = _header("core", x.chain, x.field)
        out.update(level=x.level, size=x.size, entries=_entries(x.entries), text=str(x))
        return out
    if isinstance(x, leavitt.LeavittElement):
        out = _header("leavitt", x.chain, x.field)
        out["components"] = [
            {
                "degree": str(k),
                "row_level": b.row_level,
                "col_level": b.col_level,
                "entries": _entries(b.entries),
            }
            for k, b in x.components.items()
        ]
        out["text"] = str(x)
        return out
    if isinstance(x, deep.DeepElement):
        out = _header("deep", x.chain, x.field)
        out["terms"] = [[str(u), str(v), scalar(c)] for (u, v), c in x.sorted_terms()]
        out["text"] = str(x)
        return out
    if isinstance(x, mixed.MixedElement):
        out = _header("mixed", x.chain, x.field)
        out["finite"] = _entries(x.finite)
        out["recurrent"] = {"level": x.recurrent.level, "entries": _entries(x.recurrent.entries)}
        out["text"] = mixed.format_mixed(x)
        return out
    if isinstance(x, core.ModuleVector):
        out = _header("vector", x.chain, x.field)
        out["level"] = x.level
        out["entries"] = [[k, scalar(v)] for k, v in sorted(x.entries.items())]
        return out
    if isinstance(x, deep.TailVector):
        out = _header("tail", x.chain, x.field)
        out["terms"] = [[str(w), scalar(c)] for w, c in sorted(x.terms.items())]
        return out
    raise KindMismatch(f"cannot serialize {type(x).__name__}")


def to_json(x, **kw) -> str:
    return json.dumps(to_dict(x), **kw)


def _blk(entries, F) -> dict:
    return {(int(r), int(c)): F.parse(v) for r, c, v in entries}


def from_dict(d: dict):
    if d.get("schema") != SCHEMA:
        raise ParameterError(f"unsupported schema {d.get('schema')!r}")
    F, chain, kind = parse_field(d["field"]), parse_chain(d["chain"]), d["kind"]
    if kind == "core":
        return core.CoreElement.make(chain, F, d["level"], _blk(d["entries"], F))
    if kind == "leavitt":
        blocks = [
            leavitt.RectBlock(b["row_level"], b["col_level"], _blk(b["entries"], F))
            for b in d["components"]
        ]
        return leavitt.LeavittElement(chain, F, blocks)
    if kind == "deep":
        terms = {(parse_word(u), parse_word(v)): F.parse(c) for u, v, c in d["terms"]}
        return deep.DeepElement(chain, F, terms)
    if kind == "mixed":
        rec = d["recurrent"]
        return mixed.MixedElement(
            _blk(d["finite"], F), core.CoreElement.make(chain, F, rec["level"], _blk(rec["entries"], F))
        )
    if kind == "vector":
        return core.ModuleVector.make(chain, F, d["level"], {int(k): F.parse(v) for k, v in d["entries"]})
    if kind == "tail":
        return deep.TailVector(chain, F, {parse_word(w): F.parse(c) for w, c in d["terms"]})
    raise ParameterError(f"unknown kind {kind!r}")


def from_json(text: str):
    return from_dict(json.loads(text))


def matrix(rows) -> list:
    return [[scalar(c) for c in r] for r in rows]
