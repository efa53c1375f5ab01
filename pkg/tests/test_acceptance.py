"""Acceptance suite: eleven criteria, each checked at exact equality.

Run with pytest (one PASS/FAIL line per criterion is printed to the terminal)
or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    act_terms,
    block_matrix,
    compose,
    rank_mod,
    rect_product,
    rect_sum,
    unit_matrix,
)
from supermat import chain as ch  # noqa: E402
from supermat import core, deep, gradings as gr, leavitt as lv  # noqa: E402
from supermat import presentations as pr, representations as rep, snum  # noqa: E402
from supermat.chain import AdicWord, DivisorChain, parse_chain  # noqa: E402
from supermat.field import GF, QQ  # noqa: E402

F5 = GF(5)


def _rand_word(rng, chain, t):
    return AdicWord(tuple(rng.randrange(chain.radix(i)) for i in range(t)))


def _rads(chain, T):
    return [chain.radix(i) for i in range(T)]


# 1. symbolic unit products agree with lifted matrix products


def _check_unit_pair(chain, F, u, u1, w, w1):
    T = max(len(u), len(w))
    rads = _rads(chain, T)
    oracle = compose(unit_matrix(u.digits, u1.digits, T, rads), unit_matrix(w.digits, w1.digits, T, rads))
    sym = core.unit_mul(u, u1, w, w1)
    if sym is None:
        if oracle:
            return False
        expected = core.zero(chain, F)
    else:
        if oracle != {k: 1 for k in unit_matrix(sym[0].digits, sym[1].digits, T, rads)}:
            return False
        expected = core.unit(chain, sym[0], sym[1], F)
    got = core.unit(chain, u, u1, F) * core.unit(chain, w, w1, F)
    return got == expected and core.lift(got, T).entries == {k: F(v) for k, v in oracle.items()}


def criterion_1():
    rng = random.Random(101)
    exhaustive = random_pairs = 0
    for text in ("2,2,2", "2,3,4", "3,3"):
        finite = parse_chain(text)
        units = [
            (u, v)
            for t in range(3)
            for u in ch.all_words(t, finite)
            for v in ch.all_words(t, finite)
        ]
        repeating = parse_chain(text + "+repeat")
        for F in (QQ, F5):
            for (u, u1), (w, w1) in product(units, units):
                if not _check_unit_pair(finite, F, u, u1, w, w1):
                    return False, f"exhaustive {text} {F.name}: {u},{u1} * {w},{w1}"
                exhaustive += 1
            for _ in range(500):
                a, b = rng.randint(0, 4), rng.randint(0, 4)
                u, u1 = _rand_word(rng, repeating, a), _rand_word(rng, repeating, a)
                if rng.random() < 0.5:
                    # force a tail match half of the time
                    high = AdicWord(tuple(rng.randrange(repeating.radix(i)) for i in range(a, max(a, b))))
                    w = ch.concat_above(high, u1, repeating)
                    b = len(w)
                else:
                    w = _rand_word(rng, repeating, b)
                w1 = _rand_word(rng, repeating, b)
                if not _check_unit_pair(repeating, F, u, u1, w, w1):
                    return False, f"random {text} {F.name}: {u},{u1} * {w},{w1}"
                random_pairs += 1
    return True, f"{exhaustive} exhaustive pairs, {random_pairs} random pairs"


# 2. canonical forms


def _rand_element(rng, chain, F, max_level=3, terms=4):
    t = rng.randint(0, min(max_level, chain.depth or max_level))
    n = chain.size(t)
    entries = {}
    for _ in range(rng.randint(0, terms)):
        entries[(rng.randrange(n), rng.randrange(n))] = F(rng.randint(-3, 3))
    return core.CoreElement.make(chain, F, t, entries)


def _rand_periodic(rng, chain, F):
    """An element whose top block repeats a coarser one, built at a non-canonical level."""
    x = _rand_element(rng, chain, F, max_level=2)
    top = min(x.level + rng.randint(0, 2), chain.depth or 4)
    return core.lift(x, top)


CANON_CHAINS = [parse_chain(s) for s in ("2+repeat", "3+repeat", "2,3+repeat", "2,3,4", "2,2,2")]


def criterion_2():
    rng = random.Random(202)
    for i in range(1000):
        chain = rng.choice(CANON_CHAINS)
        F = rng.choice((QQ, F5))
        x = _rand_periodic(rng, chain, F) if i % 2 else _rand_element(rng, chain, F)
        c = core.compress(x)
        # compress . lift = identity on canonical elements, compress idempotent
        top = min(c.level + rng.randint(0, 2), chain.depth or 5)
        if core.compress(core.lift(c, top)).key() != c.key():
            return False, f"compress(lift) at sample {i}"
        if core.compress(c).key() != c.key() or not c.is_canonical():
            return False, f"idempotence at sample {i}"
        # equality semantics
        y = rng.choice([core.lift(x, top if top >= x.level else x.level), _rand_element(rng, chain, F), x + x - x])
        if (x == y) != core.equal_at_common_level(x, y) or ((x == y) and hash(x) != hash(y)):
            return False, f"equality at sample {i}"
    return True, "1000 random elements"


# 3. recognition witnesses and roots


def criterion_3():
    for n in range(2, 9):
        for k in range(1, n):
            t = pr.aar_witnesses(n, k)
            if not pr.aar_check(t.a, t.b, t.c, n, k):
                return False, f"aar n={n} k={k}"
    for n in (2, 3, 4):
        b = pr.aar_witnesses(n, 1).b
        for m in (2, 3, 4):
            r = pr.matrix_root(n, m)
            target = block_matrix(b.entries, n, n * m)
            if (r**m).block_at(2) != target:
                return False, f"root power n={n} m={m}"
            if pr.nilpotency_index(r, n * m + 1) != n * m:
                return False, f"nilpotency n={n} m={m}"
    for text in ("2,2,2", "2,3", "3,2"):
        if not pr.check_chain_relations(pr.chain_witnesses(parse_chain(text))):
            return False, f"chain {text}"
    return True, "aar n<=8, roots n,m in {2,3,4}, chains 2,2,2 / 2,3 / 3,2"


# 4. Leavitt relations in the rectangular realization


def _terms(x):
    out = {}
    for u, v, c in x.terms():
        out[(u.digits, v.digits)] = out.get((u.digits, v.digits), 0) + c
    return out


def criterion_4():
    rng = random.Random(404)
    for m in (2, 3, 5):
        c = DivisorChain.homogeneous(m)
        one = lv.identity(c)
        rows = 3 * m * m
        eye = rect_sum({((), ()): 1}, m, rows)
        total = lv.zero(c)
        for i in range(m):
            total = total + lv.gen_x(c, i) * lv.gen_y(c, i)
            for j in range(m):
                prod = lv.gen_y(c, i) * lv.gen_x(c, j)
                expected = one if i == j else lv.zero(c)
                oracle = rect_product({((), (i,)): 1}, {((j,), ()): 1}, m, rows)
                if prod != expected or oracle != (eye if i == j else {}):
                    return False, f"y{i} x{j} at m={m}"
        sum_oracle = {}
        for i in range(m):
            for k, v in rect_product({((i,), ()): 1}, {((), (i,)): 1}, m, rows).items():
                sum_oracle[k] = sum_oracle.get(k, 0) + v
        if total != one or sum_oracle != eye:
            return False, f"sum x_i y_i at m={m}"
    for s in range(500):
        m = rng.choice((2, 3, 5))
        c = DivisorChain.homogeneous(m)
        u, u1, w, w1 = (_rand_word(rng, c, rng.randint(0, 3)) for _ in range(4))
        if s % 2:
            w = ch.concat_above(_rand_word(rng, c, rng.randint(0, 2)), u1)
        got = lv.term_mul(u, u1, w, w1, c)
        rows = 2 * m**3
        oracle = rect_product({(u.digits, u1.digits): 1}, {(w.digits, w1.digits): 1}, m, rows)
        expected = {} if got is None else rect_sum({(got[0].digits, got[1].digits): 1}, m, rows)
        prod = lv.term(c, u, u1) * lv.term(c, w, w1)
        if oracle != expected or prod != (lv.zero(c) if got is None else lv.term(c, *got)):
            return False, f"term_mul {u},{u1},{w},{w1} at m={m}"
    return True, "relations for m=2,3,5; 500 random quadruples"


# 5. degree-zero Leavitt elements versus recurrent matrices


def _rand_balanced(rng, c, F=QQ):
    x = lv.zero(c, F)
    for _ in range(rng.randint(0, 4)):
        t = rng.randint(0, 3)
        x = x + lv.term(c, _rand_word(rng, c, t), _rand_word(rng, c, t), F, rng.randint(-3, 3))
    return x


def criterion_5():
    rng = random.Random(505)
    for m in (2, 3):
        c = DivisorChain.homogeneous(m)
        for s in range(200):
            a, b = _rand_balanced(rng, c), _rand_balanced(rng, c)
            ya, yb = lv.to_core(a), lv.to_core(b)
            if lv.from_core(ya) != a or lv.to_core(lv.from_core(ya)) != ya:
                return False, f"inverse at m={m} sample {s}"
            if lv.to_core(a * b) != ya * yb or lv.from_core(ya * yb) != a * b:
                return False, f"multiplicative at m={m} sample {s}"
    return True, "200 random pairs for m=2 and m=3"


# 6. deep matrices


def _padded(w: AdicWord, L=12):
    return w.digits + (0,) * (L - len(w))


def _dterms(x):
    return {(u.digits, v.digits): c for (u, v), c in x.terms.items()}


def _rand_deep(rng, c, balanced=False, max_len=3):
    x = deep.zero(c)
    for _ in range(rng.randint(1, 3)):
        a = rng.randint(0, max_len)
        b = a if balanced else rng.randint(0, max_len)
        x = x + deep.d_unit(c, _rand_word(rng, c, a), _rand_word(rng, c, b), QQ, rng.randint(-2, 2) or 1)
    return x


def criterion_6():
    rng = random.Random(606)
    c2 = DivisorChain.homogeneous(2)
    small = [w for t in range(3) for w in ch.all_words(t, c2)]
    basis = [w for t in range(5) for w in ch.all_words(t, c2)]
    gens = [deep.d_unit(c2, u, v) for u in small for v in small]
    for a in gens:
        ta = _dterms(a)
        for b in gens:
            tab, tb = _dterms(a * b), _dterms(b)
            for w in basis:
                vec = {_padded(w): 1}
                if act_terms(tab, vec) != act_terms(ta, act_terms(tb, vec)):
                    return False, f"m=2 composition {a} * {b} on {w}"
    # library action agrees with the padded oracle
    for a in gens[::5]:
        for w in basis:
            got = deep.frankenstein_act(a, deep.tail(c2, w))
            if {_padded(k): v for k, v in got.terms.items()} != act_terms(_dterms(a), {_padded(w): 1}):
                return False, f"action oracle {a} on {w}"
    c3 = DivisorChain.homogeneous(3)
    for s in range(200):
        x, y = _rand_deep(rng, c3), _rand_deep(rng, c3)
        w = _rand_word(rng, c3, rng.randint(0, 4))
        v = deep.tail(c3, w)
        lhs = deep.frankenstein_act(x * y, v)
        rhs = deep.frankenstein_act(x, deep.frankenstein_act(y, v))
        oracle = act_terms(_dterms(x * y), {_padded(w): 1})
        if lhs != rhs or {_padded(k): c for k, c in lhs.terms.items()} != oracle:
            return False, f"m=3 sample {s}"
    kernel = deep.identity(c2) - deep.d_unit(c2, "0", "0") - deep.d_unit(c2, "1", "1")
    for t in range(6):
        for w in ch.all_words(t, c2):
            if not deep.frankenstein_act(kernel, deep.tail(c2, w)).is_zero():
                return False, f"kernel witness on {w}"
    for s in range(200):
        m = rng.choice((2, 3))
        c = DivisorChain.homogeneous(m)
        x, y = _rand_deep(rng, c), _rand_deep(rng, c)
        if deep.to_leavitt(x * y) != deep.to_leavitt(x) * deep.to_leavitt(y):
            return False, f"to_leavitt sample {s}"
        xb, yb = _rand_deep(rng, c, balanced=True), _rand_deep(rng, c, balanced=True)
        if deep.balanced_to_core(xb * yb) != deep.balanced_to_core(xb) * deep.balanced_to_core(yb):
            return False, f"balanced_to_core sample {s}"
    return True, f"{len(gens) ** 2} generator pairs x {len(basis)} words (m=2); 200 random (m=3); maps 200+200"


# 7. gradings


def criterion_7():
    rng = random.Random(707)
    chain = parse_chain("2,3,2")
    Z2 = gr.parse_group("Z^2")

    def rand_h():
        return gr.ElementaryGrading(
            chain,
            Z2,
            tuple(
                tuple((rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(chain.radix(t)))
                for t in range(3)
            ),
        )

    for _ in range(5):
        g = rand_h()
        for t in range(4):
            for u in ch.all_words(t, chain):
                for v in ch.all_words(t, chain):
                    d = gr.unit_degree(u, v, g)
                    for T in range(t, 4):
                        for z in ch.all_words(T, chain):
                            high = AdicWord(z.digits[t:])
                            if gr.unit_degree(high.above(u), high.above(v), g) != d:
                                return False, f"lift invariance {u},{v}"
    nonzero = 0
    for s in range(500):
        g = rand_h()
        x = _rand_element(rng, chain, QQ, terms=5)
        y = _rand_element(rng, chain, QQ, terms=5)
        cx, cy = gr.components(x, g), gr.components(y, g)
        if not cx or not cy:
            continue
        dx, xh = rng.choice(sorted(cx.items(), key=lambda kv: kv[0]))
        dy, yh = rng.choice(sorted(cy.items(), key=lambda kv: kv[0]))
        p = xh * yh
        if not p.is_zero():
            nonzero += 1
            if gr.is_homogeneous(p, g) != Z2.add(dx, dy):
                return False, f"additivity sample {s}"
        # partition
        total = core.zero(chain)
        for d, comp in cx.items():
            if gr.is_homogeneous(comp, g) != d:
                return False, f"component degree sample {s}"
            total = total + comp
        if total != x:
            return False, f"partition sample {s}"
    # lifted unit pairs always multiply to nonzero, so additivity is exercised heavily
    for s in range(500):
        g = rand_h()
        t = rng.randint(0, 3)
        u, v = _rand_word(rng, chain, t), _rand_word(rng, chain, t)
        t2 = rng.randint(t, 3)
        w = ch.concat_above(AdicWord(tuple(rng.randrange(chain.radix(i)) for i in range(t, t2))), v)
        w1 = _rand_word(rng, chain, t2)
        x, y = core.unit(chain, u, v), core.unit(chain, w, w1)
        p = x * y
        if p.is_zero() or gr.is_homogeneous(p, g) != Z2.add(gr.is_homogeneous(x, g), gr.is_homogeneous(y, g)):
            return False, f"unit additivity sample {s}"
        nonzero += 1
    return True, f"lift invariance to depth 3; {nonzero} nonzero homogeneous products; partitions"


# 8. representations


def _all_arrays(F, dim, ell):
    p = F.p
    for vals in product(range(p), repeat=dim * ell):
        yield [list(vals[r * ell : (r + 1) * ell]) for r in range(dim)]


def criterion_8():
    rng = random.Random(808)
    F2 = GF(2)
    solved = lifted = 0
    for dim in (1, 2, 4):
        for rows in _all_arrays(F2, dim, 2):
            x = rep.tensor(rows, F2, 3)
            r = rank_mod(rows, 2)
            if r != rep.tensor_rank(x):
                return False, f"rank oracle {rows}"
            if r > 0:
                y = rep.lift_step(x)
                if rep.tensor_rank(y) != 2 or rank_mod([list(map(int, q)) for q in y.rows], 2) != 2:
                    return False, f"lift rank {rows}"
                lifted += 1
            if r == 2:
                for _ in range(3):
                    target = rep.tensor([[rng.randrange(2) for _ in range(2)] for _ in range(dim)], F2)
                    a = rep.transitive_solve(x, target)
                    if rep.apply(a, x).rows != target.rows:
                        return False, f"solve {rows}"
                    solved += 1
    for s in range(500):
        dw, du, ell = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 3)
        x = rep.tensor([[rng.randrange(5) for _ in range(ell)] for _ in range(dw)], F5)
        T = [[rng.randrange(5) for _ in range(dw)] for _ in range(du)]
        img = rep.apply(T, x)
        if not rep.rank_monotone_check(T, x) or rank_mod([list(map(int, q)) for q in img.rows], 5) > rank_mod(
            [list(map(int, q)) for q in x.rows], 5
        ):
            return False, f"monotone sample {s}"
    # annihilator co-dimension along locally simple chains
    chain = parse_chain("2,3,2")
    for s in range(30):
        alphas = []
        for i in range(3):
            a = [rng.randint(-2, 2) for _ in range(chain.radix(i))]
            if not any(a):
                a[0] = 1
            alphas.append(tuple(a))
        spec = rep.LocallySimpleSpec(chain, tuple(alphas))
        v = rep.ls_vector(spec, 1, [1, rng.randint(-2, 2)])
        for t in (1, 2, 3):
            if rep.ann_codim(rep.ls_tensor(rep.ls_lift(v, t)))[1] != 1:
                return False, f"locally simple codim sample {s} level {t}"
    # and along the band construction
    for s in range(30):
        ell, p = 2, 3
        rows = [[rng.randrange(5) for _ in range(ell)] for _ in range(rng.randint(1, 3))]
        if not any(any(r) for r in rows):
            rows[0][0] = 1
        x = rep.tensor(rows, F5, p)
        for n in (1, 2, 3):
            x = rep.lift_step(x)
            raw, norm = rep.ann_codim(x)
            if norm != ell or raw != x.dim_w * ell:
                return False, f"band codim sample {s} level {n}"
    # isomorphism criterion on constructed pairs
    for s in range(50):
        depth = 3
        base = []
        for i in range(depth):
            a = [rng.randint(-3, 3) for _ in range(chain.radix(i))]
            if not any(a):
                a[-1] = 2
            base.append(a)
        start = rng.randint(1, depth)
        expect = bool(s % 2)
        other = []
        for i in range(depth):
            if i + 1 < start:
                a = [rng.randint(-3, 3) for _ in range(chain.radix(i))]
                other.append(a if any(a) else [1] + [0] * (chain.radix(i) - 1))
            else:
                k = rng.choice([-2, -1, 1, 3])
                other.append([k * c for c in base[i]])
        if not expect:
            i = rng.randint(start - 1, depth - 1)
            bent = list(base[i])
            j = next(j for j, c in enumerate(bent) if c != 0)
            k = (j + 1) % len(bent)
            bent[k] += 1  # breaks proportionality since bent[j] != 0
            other[i] = bent
        oracle = all(rank_mod([base[i], other[i]]) <= 1 for i in range(start - 1, depth))
        s1 = rep.LocallySimpleSpec(chain, tuple(map(tuple, base)))
        s2 = rep.LocallySimpleSpec(chain, tuple(map(tuple, other)))
        if oracle != expect or rep.ls_isomorphic(s1, s2, start) != expect:
            return False, f"isomorphism sample {s}"
    return True, f"{lifted} lifts, {solved} solves, 500 monotone, codims, 50 module pairs"


# 9. supernatural arithmetic


def criterion_9():
    count = 0
    exps = (0, 1, 2, snum.INF)
    for e2, e3, e5 in product(exps, repeat=3):
        N = snum.SupernaturalNumber({2: e2, 3: e3, 5: e5})
        for n in range(2, 13):
            a = snum.tensor_absorbs(n, N)
            b = snum.mul(snum.from_natural(n), N) == N
            c = snum.divides(snum.infinite_power(n), N)
            if not a == b == c:
                return False, f"n={n} N={N}"
            count += 1
    return True, f"{count} (n, N) pairs"


# 10. module action well-definedness


MODULE_CHAINS = [parse_chain(s) for s in ("2+repeat", "3+repeat", "2,3+repeat", "2,3,4")]


def _rand_vector(rng, chain, F, nonzero=False):
    t = rng.randint(0, min(3, chain.depth or 3))
    n = chain.size(t)
    entries = {rng.randrange(n): F(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))}
    if nonzero and not any(v != 0 for v in entries.values()):
        entries[0] = F(1)
    return core.ModuleVector.make(chain, F, t, entries)


def criterion_10():
    rng = random.Random(1010)
    for s in range(300):
        chain = rng.choice(MODULE_CHAINS)
        F = rng.choice((QQ, F5))
        x, v = _rand_element(rng, chain, F), _rand_vector(rng, chain, F)
        base = core.act(x, v)
        top = max(x.level, v.level)
        up = min(top + rng.randint(0, 2), chain.depth or 5)
        if core.act(core.lift(x, up), v) != base or core.act(x, core.lift_vector(v, up)) != base:
            return False, f"lift commutation sample {s}"
        # dense oracle at the top level
        N = chain.size(up)
        M = block_matrix(x.entries, x.size, N)
        vec = [v.entries.get(i % v.chain.size(v.level), F.zero) for i in range(N)]
        dense = [sum((M.get((i, j), F.zero) * vec[j] for j in range(N)), F.zero) for i in range(N)]
        got = core.lift_vector(base, up).entries
        if [got.get(i, F.zero) for i in range(N)] != dense:
            return False, f"dense oracle sample {s}"
    for s in range(100):
        chain = rng.choice(MODULE_CHAINS)
        F = rng.choice((QQ, F5))
        v, w = _rand_vector(rng, chain, F, nonzero=True), _rand_vector(rng, chain, F, nonzero=True)
        if v.is_zero() or w.is_zero():
            continue
        a = core.transitive_witness(v, w)
        if core.act(a, v) != w:
            return False, f"transitive witness sample {s}"
    return True, "300 act/lift pairs, 100 witness pairs"


# 11. frontend


def criterion_11():
    import io
    from contextlib import redirect_stderr, redirect_stdout
    import tempfile

    from cli_cases import CASES
    from supermat import cli
    from supermat.frontend.parser import parse, to_text

    golden = Path(__file__).parent / "golden"
    commands = set()
    with tempfile.TemporaryDirectory() as tmp:
        fig = str(Path(tmp) / "figure.png")
        for name, argv, stdin in CASES:
            out, err = io.StringIO(), io.StringIO()
            old_stdin = sys.stdin
            if stdin is not None:
                sys.stdin = io.StringIO(stdin)
            try:
                with redirect_stdout(out), redirect_stderr(err):
                    code = cli.main([a.replace("{FIG}", fig) for a in argv])
            finally:
                sys.stdin = old_stdin
            got = {
                "argv": argv,
                "stdin": stdin,
                "exit": code,
                "stdout": out.getvalue().replace(fig, "{FIG}"),
                "stderr": err.getvalue(),
            }
            if got != json.loads((golden / f"{name}.json").read_text()):
                return False, f"golden mismatch {name}"
            commands.add(argv[0])
    needed = {"eval", "canon", "realize", "act", "aar", "aar-root", "chain-witness", "grade", "rank", "ann", "iso"}
    if len(CASES) < 30 or not needed <= commands:
        return False, "golden coverage"
    corpus = [l for l in (Path(__file__).parent / "data" / "expressions.txt").read_text().splitlines() if l.strip()]
    if len(corpus) != 100:
        return False, "corpus size"
    for line in corpus:
        tree = parse(line)
        if parse(to_text(tree)) != tree:
            return False, f"round trip {line!r}"
    return True, f"{len(CASES)} CLI goldens, 100-expression round trip"


CRITERIA = [
    (1, "symbolic/matrix agreement", criterion_1),
    (2, "canonical forms", criterion_2),
    (3, "recognition witnesses", criterion_3),
    (4, "Leavitt relations", criterion_4),
    (5, "degree-zero isomorphism", criterion_5),
    (6, "deep matrices", criterion_6),
    (7, "gradings", criterion_7),
    (8, "representations", criterion_8),
    (9, "supernatural arithmetic", criterion_9),
    (10, "module action", criterion_10),
    (11, "frontend", criterion_11),
]


def _line(num, title, ok, detail):
    return f"ACCEPTANCE {num:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for num, title, fn in CRITERIA:
        ok, detail = fn()
        failures += not ok
        print(_line(num, title, ok, detail))
    sys.exit(1 if failures else 0)
