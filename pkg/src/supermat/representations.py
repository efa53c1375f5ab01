"""Simple modules over M_N(F): locally simple chains and the band construction.

A locally simple module is the direct limit of ``V_t = W_1 (x) ... (x) W_t``
along ``x -> x (x) alpha_(t+1)``.  The new tensor factor is the most significant
index (``i * n_t + k``), matching the block-diagonal embedding of matrix
algebras used for :class:`~supermat.core.CoreElement`.

The band construction instead works in ``W (x) F^l`` with arrays of shape
``dim W x l``.  A step ``id (x) phi`` replaces row ``w`` by the ``p`` rows of
``phi(row)``, at indices ``w * p + q``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .chain import DivisorChain
from .core import CoreElement
from .errors import ChainMismatch, ParameterError, RankDeficient
from .field import QQ, Field


@dataclass(frozen=True)
class LocallySimpleSpec:
    chain: DivisorChain
    alphas: tuple  # alphas[i - 1] is alpha_i in F^(m_i)
    field: Field = QQ

    def __post_init__(self):
        alphas = []
        for i, a in enumerate(self.alphas):
            a = tuple(self.field(c) for c in a)
            if len(a) != self.chain.radix(i):
                raise ParameterError(f"alpha_{i + 1} needs length {self.chain.radix(i)}")
            if all(c == 0 for c in a):
                raise ParameterError(f"alpha_{i + 1} is zero")
            alphas.append(a)
        object.__setattr__(self, "alphas", tuple(alphas))

    @property
    def depth(self) -> int:
        return len(self.alphas)

    @classmethod
    def first_basis(cls, chain, depth, field=QQ):
        return cls(chain, tuple(tuple(int(j == 0) for j in range(chain.radix(i))) for i in range(depth)), field)

    @classmethod
    def stacking(cls, chain, depth, field=QQ):
        """All-ones alphas: the periodic-sequence module of :mod:`supermat.core`."""
        return cls(chain, tuple((1,) * chain.radix(i) for i in range(depth)), field)


@dataclass(frozen=True)
class LSVector:
    spec: LocallySimpleSpec
    level: int
    coeffs: tuple

    def __eq__(self, other):
        if not isinstance(other, LSVector) or other.spec != self.spec:
            return NotImplemented
        t = max(self.level, other.level)
        return ls_lift(self, t).coeffs == ls_lift(other, t).coeffs

    def __hash__(self):
        return hash((self.spec, ls_lift(self, self.spec.depth).coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def ls_vector(spec: LocallySimpleSpec, level: int, coeffs) -> LSVector:
    n = spec.chain.size(level)
    coeffs = tuple(spec.field(c) for c in coeffs)
    if len(coeffs) != n:
        raise ParameterError(f"level {level} vectors have {n} coordinates")
    return LSVector(spec, level, coeffs)


def ls_lift(v: LSVector, t: int) -> LSVector:
    if t > v.spec.depth:
        raise ParameterError(f"spec only reaches level {v.spec.depth}")
    coeffs = v.coeffs
    for s in range(v.level, t):
        alpha = v.spec.alphas[s]
        coeffs = tuple(a * c for a in alpha for c in coeffs)
    return LSVector(v.spec, t, coeffs)


def ls_act(x: CoreElement, v: LSVector) -> LSVector:
    if x.chain != v.spec.chain:
        raise ChainMismatch(f"chains {x.chain} and {v.spec.chain} differ")
    t = max(x.level, v.level)
    w = ls_lift(v, t)
    block = x.block_at(t)
    out = [v.spec.field.zero] * len(w.coeffs)
    for (r, c), a in block.items():
        out[r] = out[r] + a * w.coeffs[c]
    return LSVector(v.spec, t, tuple(out))


def parallel(a, b) -> bool:
    """Linear dependence of two nonzero vectors."""
    return linalg.rank([list(a), list(b)]) <= 1


def ls_isomorphic(spec1: LocallySimpleSpec, spec2: LocallySimpleSpec, from_index: int = 1) -> bool:
    """Whether alpha_i and alpha'_i are parallel for every i >= from_index (up to the depth)."""
    if spec1.chain != spec2.chain:
        raise ChainMismatch("specs live on different chains")
    if spec1.depth != spec2.depth:
        raise ParameterError(f"depth mismatch: {spec1.depth} vs {spec2.depth}")
    return all(
        parallel(spec1.alphas[i - 1], spec2.alphas[i - 1])
        for i in range(max(from_index, 1), spec1.depth + 1)
    )


@dataclass(frozen=True)
class TensorVector:
    """An element of ``W (x) F^l`` as a ``dim W x l`` array (row w = coefficients of e_w)."""

    rows: tuple
    field: Field = QQ
    p: int = 0
    level: int = 0

    def __post_init__(self):
        rows = tuple(tuple(self.field(c) for c in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ParameterError("ragged tensor array")
        object.__setattr__(self, "rows", rows)

    @property
    def dim_w(self) -> int:
        return len(self.rows)

    @property
    def ell(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_zero(self) -> bool:
        return all(c == 0 for r in self.rows for c in r)


def tensor(rows, field: Field = QQ, p: int = 0, level: int = 0) -> TensorVector:
    return TensorVector(tuple(tuple(r) for r in rows), field, p, level)


def phi_band(alpha, p: int, field: Field = QQ) -> list:
    """The band map ``F^l -> F^p (x) F^l``: column j is alpha shifted down by j."""
    ell = len(alpha)
    if ell < 1 or 2 * ell - 1 > p:
        raise ParameterError(f"band map needs 2l - 1 <= p, got l={ell}, p={p}")
    out = [[field.zero] * ell for _ in range(p)]
    for j in range(ell):
        for r, a in enumerate(alpha):
            out[j + r][j] = field(a)
    return out


def lift_step(x: TensorVector, p: int = 0) -> TensorVector:
    """``id (x) phi``: each row becomes the p rows of its band image."""
    p = p or x.p
    rows = []
    for r in x.rows:
        rows.extend(phi_band(r, p, x.field))
    return TensorVector(tuple(map(tuple, rows)), x.field, p, x.level + 1)


def tensor_rank(x: TensorVector) -> int:
    """Dimension of the span of the W-components (the columns of the array)."""
    if not x.rows:
        return 0
    return linalg.rank(x.rows)


def apply(a, x: TensorVector) -> TensorVector:
    """``(a (x) 1) x`` for a linear map ``a: W -> U`` given as a dense matrix."""
    if a and len(a[0]) != x.dim_w:
        raise ParameterError(f"map with {len(a[0])} columns cannot act on dim W = {x.dim_w}")
    rows = linalg.dense_mul([list(r) for r in a], [list(r) for r in x.rows], x.field.zero)
    return TensorVector(tuple(map(tuple, rows)), x.field, x.p, x.level)


def transitive_solve(x: TensorVector, target: TensorVector) -> list:
    """An endomorphism ``a`` of W with ``a x = target``; needs rank(x) = l."""
    if (target.dim_w, target.ell) != (x.dim_w, x.ell):
        raise ParameterError("target shape differs from source shape")
    if tensor_rank(x) < x.ell:
        raise RankDeficient(f"rank {tensor_rank(x)} < l = {x.ell}")
    F = x.field
    n, ell = x.dim_w, x.ell
    if target.rows == x.rows:
        return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    # pivot rows of X give an invertible l x l submatrix
    _, piv = linalg.rref(linalg.transpose(x.rows))
    sub = [list(x.rows[r]) for r in piv]
    sub_inv = linalg.inverse(sub, F.one, F.zero)
    left = [[F.zero] * n for _ in range(ell)]
    for i in range(ell):
        for k, r in enumerate(piv):
            left[i][r] = sub_inv[i][k]
    a = linalg.dense_mul([list(r) for r in target.rows], left, F.zero)
    if apply(a, x).rows != target.rows:
        raise RankDeficient("solve failed verification")
    return a


def ann_codim(x: TensorVector):
    """Codimension of ``{a : a x = 0}`` in End(W): raw ``N * rank`` and normalized ``rank``."""
    r = tensor_rank(x)
    return x.dim_w * r, r


def rank_monotone_check(T, x: TensorVector) -> bool:
    """``rank((T (x) 1) x) <= rank(x)``."""
    return tensor_rank(apply(T, x)) <= tensor_rank(x)


def ls_tensor(v: LSVector) -> TensorVector:
    """A locally simple vector as an element of ``V_t (x) F^1``."""
    return TensorVector(tuple((c,) for c in v.coeffs), v.spec.field)


def orbit_spans(x: TensorVector) -> bool:
    """Whether End(W) x is all of ``W (x) F^l``: every basis tensor is reached."""
    F = x.field
    for w in range(x.dim_w):
        for j in range(x.ell):
            target = [[F.zero] * x.ell for _ in range(x.dim_w)]
            target[w][j] = F.one
            try:
                transitive_solve(x, TensorVector(tuple(map(tuple, target)), F))
            except RankDeficient:
                return False
    return True
