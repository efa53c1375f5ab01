"""Matrix recognition witnesses and roots of the nilpotent shift.

``M_n(F)`` is recognized by elements a, b, c with ``b^n = 0`` and
``a b^k + b^(n-k) c = 1``.  A chain ``M_{n_1} < M_{n_2} < ...`` is recognized by
successive roots ``b_t^(m_t) = b_(t-1)`` of the shift.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .chain import DivisorChain
from .core import CoreElement
from .errors import ParameterError, ValidationFailure
from .field import QQ, Field


@dataclass(frozen=True)
class AARTriple:
    a: CoreElement
    b: CoreElement
    c: CoreElement
    n: int
    k: int


@dataclass(frozen=True)
class RootChain:
    chain: DivisorChain
    a: CoreElement
    c: CoreElement
    b: tuple  # b[0] is b_1, at level 1


def _matrix(chain, level, pairs, field) -> CoreElement:
    return core.from_block(chain, level, {(i, j): 1 for i, j in pairs}, field)


def aar_witnesses(n: int, k: int, field: Field = QQ) -> AARTriple:
    if n < 2 or not 1 <= k <= n - 1:
        raise ParameterError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    chain = DivisorChain((n,))
    a = _matrix(chain, 1, [(i, k + i) for i in range(n - k)], field)
    b = _matrix(chain, 1, [(i + 1, i) for i in range(n - 1)], field)
    c = _matrix(chain, 1, [(i, n - k + i) for i in range(k)], field)
    return AARTriple(a, b, c, n, k)


def aar_check(a: CoreElement, b: CoreElement, c: CoreElement, n: int, k: int) -> bool:
    if not 1 <= k <= n - 1:
        return False
    one = core.identity(b.chain, b.field)
    return (b**n).is_zero() and a * b**k + b ** (n - k) * c == one


def _path(b: dict, size: int) -> list:
    """Basis order ``p_0 -> p_1 -> ...`` of a single-path partial permutation ``b``.

    ``b`` maps basis vector ``e_j`` to ``e_i`` for each entry ``(i, j)`` with value 1.
    """
    succ = {}
    for (i, j), v in b.items():
        if v != 1 or j in succ:
            raise ValidationFailure("not a partial permutation matrix")
        succ[j] = i
    starts = set(range(size)) - set(succ.values())
    if len(starts) != 1:
        raise ValidationFailure("shift does not consist of a single path")
    p = [starts.pop()]
    while p[-1] in succ:
        p.append(succ[p[-1]])
    if len(p) != size:
        raise ValidationFailure("shift does not cover every basis vector")
    return p


def _root_entries(path: list, m: int) -> dict:
    """An m-th root of ``s (+) ... (+) s`` (m copies) where s walks ``path``.

    For the standard shift (path = 0, 1, ..., n-1) this is
    ``sum_{j=1}^{m-1} sum_{i=1}^{n} e[jn-i, (j+1)n-i] + sum_{i=1}^{n-1} e[mn-i, n-i-1]``:
    block j is pushed down to block j-1, and the first block wraps to the last
    one advanced by one step along the path.  The terms with j = m would index
    past the matrix and are left out.
    """
    n = len(path)
    out = {}
    for j in range(1, m):
        for p in path:
            out[((j - 1) * n + p, j * n + p)] = 1
    for r in range(n - 1):
        out[((m - 1) * n + path[r + 1], path[r])] = 1
    return out


def shift_root(b: CoreElement, m: int, chain: DivisorChain, level: int) -> CoreElement:
    """An element ``b'`` at ``level`` with ``b'^m = b`` (lifted), for a single-path shift b.

    Requires ``n_level = m * n_(b.level)``.
    """
    n = b.size
    if chain.size(level) != n * m:
        raise ParameterError(f"level {level} has size {chain.size(level)}, need {n * m}")
    path = _path(b.entries, n)
    root = core.from_block(chain, level, _root_entries(path, m), b.field)
    if chain != b.chain:
        b = core.from_block(chain, b.level, b.entries, b.field)
    if root**m != b:
        raise ValidationFailure(f"computed root fails b'^{m} = b")
    return root


def matrix_root(n: int, m: int, field: Field = QQ) -> CoreElement:
    """An m-th root of the n x n shift, on the chain ``[n, m]`` (size nm)."""
    if n < 2 or m < 1:
        raise ParameterError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    if m == 1:
        return aar_witnesses(n, 1, field).b
    chain = DivisorChain((n, m))
    b = core.from_block(chain, 1, {(i + 1, i): 1 for i in range(n - 1)}, field)
    return shift_root(b, m, chain, 2)


def nilpotency_index(x: CoreElement, bound: int) -> int:
    p = core.identity(x.chain, x.field)
    for k in range(1, bound + 1):
        p = p * x
        if p.is_zero():
            return k
    raise ValidationFailure(f"not nilpotent within {bound} steps")


def chain_witnesses(chain: DivisorChain, field: Field = QQ) -> RootChain:
    """a, c and the roots b_1, ..., b_T for a finite chain, with every relation checked."""
    if chain.depth is None:
        raise ParameterError("chain_witnesses needs a finite chain")
    m1 = chain.radix(0)
    b1 = core.from_block(chain, 1, {(i + 1, i): 1 for i in range(m1 - 1)}, field)
    a = core.from_block(chain, 1, {(i, 1 + i): 1 for i in range(m1 - 1)}, field)
    c = core.from_block(chain, 1, {(0, m1 - 1): 1}, field)
    bs = [b1]
    for t in range(1, chain.depth):
        bs.append(shift_root(bs[-1], chain.radix(t), chain, t + 1))
    result = RootChain(chain, a, c, tuple(bs))
    if not check_chain_relations(result):
        raise ValidationFailure("chain witnesses fail their relations")
    return result


def check_chain_relations(rc: RootChain) -> bool:
    """``b_t^(m_t) = b_(t-1)`` with ``b_0 = 0``, and ``a b_1 + b_1^(m_1 - 1) c = 1``."""
    ch = rc.chain
    one = core.identity(ch, rc.a.field)
    prev = core.zero(ch, rc.a.field)
    for t, b in enumerate(rc.b):
        if b ** ch.radix(t) != prev:
            return False
        prev = b
    b1 = rc.b[0]
    return rc.a * b1 + b1 ** (ch.radix(0) - 1) * rc.c == one
