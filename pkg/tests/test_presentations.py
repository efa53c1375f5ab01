import pytest

from oracles import dense_mul
from supermat import core, presentations as pr
from supermat.chain import DivisorChain, parse_chain
from supermat.errors import ParameterError
from supermat.field import GF, QQ


def dense_of(x, n):
    return [[x.block_at(x.level).get((i, j), 0) for j in range(n)] for i in range(n)] if x.level else None


def E(n, pairs):
    return [[int((i, j) in pairs) for j in range(n)] for i in range(n)]


def test_aar_2_1():
    t = pr.aar_witnesses(2, 1)
    assert t.a.entries == {(0, 1): 1} and t.b.entries == {(1, 0): 1} and t.c.entries == {(0, 1): 1}
    assert t.a * t.b + t.b * t.c == core.identity(t.b.chain)
    assert pr.aar_check(t.a, t.b, t.c, 2, 1)


def test_aar_3_1_dense_oracle():
    t = pr.aar_witnesses(3, 1)
    a, b, c = E(3, {(0, 1), (1, 2)}), E(3, {(1, 0), (2, 1)}), E(3, {(0, 2)})
    assert t.a.entries == {(0, 1): 1, (1, 2): 1}
    assert t.b.entries == {(1, 0): 1, (2, 1): 1}
    assert t.c.entries == {(0, 2): 1}
    b2 = dense_mul(b, b)
    lhs = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(dense_mul(a, b), dense_mul(b2, c))]
    assert lhs == E(3, {(0, 0), (1, 1), (2, 2)})
    assert dense_mul(b2, b) == E(3, set())
    assert pr.aar_check(t.a, t.b, t.c, 3, 1)


def test_aar_check_negative():
    z = core.zero(DivisorChain((2,)))
    assert not pr.aar_check(z, z, z, 2, 1)
    t = pr.aar_witnesses(3, 1)
    one = core.identity(t.b.chain)
    assert not pr.aar_check(t.a, t.b + one, t.c, 3, 1)


def test_aar_grid_over_f3():
    F = GF(3)
    for n in range(2, 6):
        for k in range(1, n):
            t = pr.aar_witnesses(n, k, F)
            assert pr.aar_check(t.a, t.b, t.c, n, k)


def test_aar_parameter_errors():
    with pytest.raises(ParameterError):
        pr.aar_witnesses(1, 1)
    with pytest.raises(ParameterError):
        pr.aar_witnesses(3, 3)


def test_matrix_root_examples():
    b = pr.aar_witnesses(3, 1).b
    r1 = pr.matrix_root(3, 1)
    assert r1.entries == b.entries and r1.level == 1
    r = pr.matrix_root(2, 2)
    assert r.size == 4 and r.level == 2
    # b'^2 = E_10 (+) E_10
    assert (r**2).block_at(2) == {(1, 0): 1, (3, 2): 1}
    assert (r**4).is_zero() and not (r**3).is_zero()


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (3, 4), (4, 4)])
def test_nilpotency_index(n, m):
    r = pr.matrix_root(n, m)
    assert pr.nilpotency_index(r, n * m + 1) == n * m


def test_root_is_single_nilpotent_block():
    # b' acts as a single nm x nm nilpotent Jordan block: ranks drop by one per power
    from supermat import linalg

    r = pr.matrix_root(3, 2)
    N = r.size
    for k in range(N + 1):
        blk = (r**k).block_at(2) if k else {(i, i): 1 for i in range(N)}
        rows = [[blk.get((i, j), 0) for j in range(N)] for i in range(N)]
        assert linalg.rank(rows) == N - k


@pytest.mark.parametrize("text", ["2,2,2", "2,3", "3,2", "2,3,4", "5"])
def test_chain_witnesses(text):
    rc = pr.chain_witnesses(parse_chain(text), QQ)
    assert pr.check_chain_relations(rc)
    assert len(rc.b) == parse_chain(text).depth


def test_chain_witnesses_needs_finite_chain():
    with pytest.raises(ParameterError):
        pr.chain_witnesses(parse_chain("2+repeat"))


def test_check_chain_relations_detects_tampering():
    rc = pr.chain_witnesses(parse_chain("2,3"))
    bad = pr.RootChain(rc.chain, rc.a, rc.c, (rc.b[0], rc.b[1] * 2))
    assert not pr.check_chain_relations(bad)
