"""Command-line interface: ``supermat <subcommand> [options]``.

Output is JSON (``"schema": 1``) unless ``--pretty`` is given.  Domain errors
exit with status 1 and a JSON error object on stderr; usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, leavitt, mixed, presentations, representations, snum
from .chain import DivisorChain, parse_chain
from .errors import KindMismatch, ParameterError, SupermatError
from .field import parse_field
from .frontend import serialize
from .frontend.evaluator import SessionConfig, evaluate_element, evaluate_vector
from .gradings import (
    _split_top,
    is_homogeneous,
    components,
    leavitt_components,
    leavitt_is_homogeneous,
    parse_group,
    parse_h,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_expr(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _config(args) -> SessionConfig:
    m = getattr(args, "m", None)
    if m is not None and args.chain is not None:
        raise UsageError("--chain and --m are mutually exclusive")
    if m is not None:
        chain = DivisorChain.homogeneous(m)
    else:
        chain = parse_chain(args.chain or "2+repeat")
    return SessionConfig(parse_field(args.field), args.algebra, chain)


def _json_array(text: str, what: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc.msg}") from None
    return data


def _scalars(F, values):
    return [F.parse(str(v)) for v in values]


def _array(F, text):
    rows = _json_array(text, "--array")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParameterError("--array must be a JSON list of rows")
    return [_scalars(F, r) for r in rows]


# subcommand handlers: each returns a JSON-ready dict


def cmd_eval(args, cfg):
    return serialize.to_dict(evaluate_element(_read_expr(args.expr), cfg))


def cmd_canon(args, cfg):
    x = evaluate_element(_read_expr(args.expr), cfg)
    out = {"schema": 1, "kind": cfg.algebra, "canonical": serialize.to_dict(x)["text"]}
    if isinstance(x, core.CoreElement):
        out["level"] = x.level
    return out


def cmd_realize(args, cfg):
    x = evaluate_element(_read_expr(args.expr), cfg)
    if isinstance(x, core.CoreElement):
        dense = core.realize(x, args.blocks)
    elif isinstance(x, mixed.MixedElement):
        size = args.blocks * x.recurrent.size
        win = x.window(size)
        dense = [[win.get((i, j), cfg.field.zero) for j in range(size)] for i in range(size)]
    elif isinstance(x, leavitt.LeavittElement):
        n = max([cfg.chain.size(max(b.row_level, b.col_level)) for b in x.components.values()] or [1])
        size = args.blocks * n
        win = leavitt.window(x, size, size)
        dense = [[win.get((i, j), cfg.field.zero) for j in range(size)] for i in range(size)]
    else:
        raise KindMismatch(f"{cfg.algebra} elements have no matrix realization")
    out = {"schema": 1, "rows": len(dense), "cols": len(dense), "matrix": serialize.matrix(dense)}
    if args.figure:
        from .plotting import spy_figure

        spy_figure(dense, args.figure, title=serialize.to_dict(x)["text"])
        out["figure"] = args.figure
    return out


def cmd_act(args, cfg):
    if cfg.algebra not in ("core", "deep"):
        raise KindMismatch("act needs --algebra core or deep")
    x = evaluate_element(_read_expr(args.expr), cfg)
    v = evaluate_vector(args.vector, cfg)
    from . import deep

    y = deep.frankenstein_act(x, v) if cfg.algebra == "deep" else core.act(x, v)
    return serialize.to_dict(y)


def cmd_aar(args, cfg):
    t = presentations.aar_witnesses(args.n, args.k, cfg.field)
    return {
        "schema": 1,
        "n": t.n,
        "k": t.k,
        "a": serialize.to_dict(t.a),
        "b": serialize.to_dict(t.b),
        "c": serialize.to_dict(t.c),
        "verified": presentations.aar_check(t.a, t.b, t.c, t.n, t.k),
    }


def cmd_aar_root(args, cfg):
    root = presentations.matrix_root(args.n, args.root, cfg.field)
    b = presentations.aar_witnesses(args.n, 1, cfg.field).b
    lifted = core.CoreElement.make(root.chain, cfg.field, b.level, dict(b.entries))
    return {
        "schema": 1,
        "n": args.n,
        "m": args.root,
        "root": serialize.to_dict(root),
        "power_matches": root ** args.root == lifted,
        "nilpotency_index": presentations.nilpotency_index(root, args.n * args.root + 1),
    }


def cmd_chain_witness(args, cfg):
    rc = presentations.chain_witnesses(cfg.chain, cfg.field)
    return {
        "schema": 1,
        "chain": str(rc.chain),
        "a": serialize.to_dict(rc.a),
        "c": serialize.to_dict(rc.c),
        "b": [serialize.to_dict(x) for x in rc.b],
        "verified": presentations.check_chain_relations(rc),
    }


def cmd_grade(args, cfg):
    group = parse_group(args.group)
    x = evaluate_element(_read_expr(args.expr), cfg)
    if isinstance(x, core.CoreElement):
        grading = parse_h(args.h, cfg.chain, group)
        comps, deg = components(x, grading), is_homogeneous(x, grading)
    elif isinstance(x, leavitt.LeavittElement):
        assignment = [group.parse_element(g) for g in _split_top(args.h, ",")]
        comps = leavitt_components(x, assignment, group)
        deg = leavitt_is_homogeneous(x, assignment, group)
    else:
        raise KindMismatch("grade needs --algebra core or leavitt")
    return {
        "schema": 1,
        "group": str(group),
        "homogeneous": deg is not None,
        "degree": None if deg is None else group.format(deg),
        "components": [
            {"degree": group.format(g), "element": serialize.to_dict(c)} for g, c in comps.items()
        ],
    }


def _tensor(args, cfg):
    return representations.tensor(_array(cfg.field, args.array), cfg.field, args.p or 0)


def _levels(args, cfg):
    x = _tensor(args, cfg)
    out = [x]
    for _ in range(args.steps):
        if not args.p:
            raise UsageError("--steps needs --p")
        x = representations.lift_step(x, args.p)
        out.append(x)
    return out


def cmd_rank(args, cfg):
    return {
        "schema": 1,
        "levels": [
            {"level": k, "dim_w": x.dim_w, "ell": x.ell, "rank": representations.tensor_rank(x)}
            for k, x in enumerate(_levels(args, cfg))
        ],
    }


def cmd_ann(args, cfg):
    levels = []
    for k, x in enumerate(_levels(args, cfg)):
        raw, norm = representations.ann_codim(x)
        levels.append({"level": k, "dim_w": x.dim_w, "raw": raw, "normalized": norm})
    return {"schema": 1, "levels": levels}


def cmd_band_lift(args, cfg):
    if not args.p:
        raise UsageError("band-lift needs --p")
    xs = _levels(args, cfg)
    last = xs[-1]
    return {
        "schema": 1,
        "p": args.p,
        "level": len(xs) - 1,
        "array": serialize.matrix(last.rows),
        "rank": representations.tensor_rank(last),
    }


def _spec(text, cfg):
    alphas = _json_array(text, "alpha list")
    return representations.LocallySimpleSpec(cfg.chain, tuple(_scalars(cfg.field, a) for a in alphas), cfg.field)


def cmd_iso(args, cfg):
    s1, s2 = _spec(args.alpha1, cfg), _spec(args.alpha2, cfg)
    return {
        "schema": 1,
        "from_index": args.from_index,
        "isomorphic": representations.ls_isomorphic(s1, s2, args.from_index),
    }


def cmd_snum(args, cfg):
    a = snum.parse_snum(args.a)
    op = args.op
    if op in ("mul", "lcm", "gcd", "divides"):
        if args.b is None:
            raise UsageError(f"snum {op} needs two operands")
        b = snum.parse_snum(args.b)
        result = getattr(snum, op)(a, b)
    elif op == "absorbs":
        if args.b is None:
            raise UsageError("snum absorbs needs N and n")
        result = snum.tensor_absorbs(int(args.b), a)
    elif op == "locally-finite":
        result = snum.is_locally_finite(a)
    elif op == "primary":
        if args.b is None:
            raise UsageError("snum primary needs a prime")
        result = snum.primary_component(a, int(args.b))
    else:
        result = a
    if isinstance(result, snum.SupernaturalNumber):
        result = snum.format_snum(result)
    return {"schema": 1, "op": op, "result": result}


# pretty printing


def _pretty(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if "matrix" in obj:
            rows = obj["matrix"]
            width = max((len(c) for r in rows for c in r), default=1)
            return "\n".join(pad + " ".join(c.rjust(width) for c in r) for r in rows)
        lines = []
        for k, v in obj.items():
            if indent == 0 and (k == "schema" or (k == "entries" and "text" in obj)):
                continue
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_atom(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(v, indent) if isinstance(v, dict) else pad + _atom(v) for v in obj)
    return pad + _atom(obj)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _atom(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, list):
        return "[" + ", ".join(_atom(x) for x in v) + "]"
    return str(v)


def _common(chain_m: bool = True) -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="q", help="q or fp:<p>")
    common.add_argument("--algebra", default="core", choices=["core", "leavitt", "deep", "mixed"])
    common.add_argument("--chain", default=None, help="radices, e.g. 2,3 or 2+repeat")
    if chain_m:
        common.add_argument("--m", type=int, default=None, help="homogeneous chain m+repeat")
    common.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    return common


def build_parser() -> argparse.ArgumentParser:
    common, no_m = _common(), _common(chain_m=False)

    p = _Parser(prog="supermat", description="Exact supernatural matrix computations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, parent=common):
        sp = sub.add_parser(name, parents=[parent], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    for name, fn, h in (
        ("eval", cmd_eval, "evaluate an expression"),
        ("canon", cmd_canon, "canonical form of an expression"),
    ):
        add(name, fn, h).add_argument("expr", help="expression, or - for stdin")

    sp = add("realize", cmd_realize, "dense window of the realized matrix")
    sp.add_argument("expr")
    sp.add_argument("--blocks", type=int, default=1)
    sp.add_argument("--figure", default=None, help="also write a heat-map image (needs matplotlib)")

    sp = add("act", cmd_act, "apply an element to a vector")
    sp.add_argument("expr")
    sp.add_argument("--vector", required=True, help="vector expression in w[...] generators")

    sp = add("aar", cmd_aar, "matrix-ring recognition witnesses a, b, c")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("aar-root", cmd_aar_root, "m-th root of the shift witness", parent=no_m)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", dest="root", type=int, required=True, help="root order")

    add("chain-witness", cmd_chain_witness, "witnesses along the divisor chain")

    sp = add("grade", cmd_grade, "homogeneous decomposition under a grading")
    sp.add_argument("expr")
    sp.add_argument("--group", default="Z")
    sp.add_argument("--h", required=True, help="core: 0:g,g;1:g,...  leavitt: g0,g1,...")

    for name, fn, h in (
        ("rank", cmd_rank, "tensor rank along band lifts"),
        ("ann", cmd_ann, "annihilator codimension along band lifts"),
        ("band-lift", cmd_band_lift, "apply the band map repeatedly"),
    ):
        sp = add(name, fn, h)
        sp.add_argument("--array", required=True, help="JSON rows of the dim W x l array")
        sp.add_argument("--p", type=int, default=0)
        sp.add_argument("--steps", type=int, default=1 if name == "band-lift" else 0)

    sp = add("iso", cmd_iso, "isomorphism test for locally simple modules")
    sp.add_argument("--alpha1", required=True, help="JSON list of alpha vectors")
    sp.add_argument("--alpha2", required=True)
    sp.add_argument("--from", dest="from_index", type=int, default=1)

    sp = add("snum", cmd_snum, "supernatural number arithmetic")
    sp.add_argument(
        "op", choices=["canon", "mul", "lcm", "gcd", "divides", "absorbs", "locally-finite", "primary"]
    )
    sp.add_argument("a")
    sp.add_argument("b", nargs="?")
    return p


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"schema": 1, "error": {"kind": kind, "message": message}}) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        result = args.fn(args, cfg)
    except UsageError as exc:
        return _fail("USAGE_ERROR", str(exc), 2)
    except SupermatError as exc:
        return _fail(exc.kind, str(exc), 1)
    except ZeroDivisionError as exc:
        return _fail("DIVISION_BY_ZERO", str(exc), 1)
    if args.pretty:
        print(_pretty(result))
    else:
        print(json.dumps(result, sort_keys=False))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
