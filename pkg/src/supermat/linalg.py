"""Exact linear algebra over a field: sparse products and Gaussian elimination.

Matrices are either sparse ``{(row, col): value}`` dicts with no stored zeros,
or dense lists of rows.  Nothing here knows which field is in use; scalars are
only combined with ``+``, ``-``, ``*``, ``/`` and compared with ``== 0``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction


def sp_clean(entries: dict) -> dict:
    return {k: v for k, v in entries.items() if v != 0}


def sp_add(a: dict, b: dict, sign=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        w = v if sign == 1 else -v
        out[k] = w if s is None else s + w
    return sp_clean(out)


def sp_scale(a: dict, c) -> dict:
    if c == 0:
        return {}
    return sp_clean({k: c * v for k, v in a.items()})


def sp_mul(a: dict, b: dict) -> dict:
    rows_b = defaultdict(list)
    for (r, c), v in b.items():
        rows_b[r].append((c, v))
    acc: dict = {}
    for (i, k), v in a.items():
        for j, w in rows_b.get(k, ()):
            key = (i, j)
            s = acc.get(key)
            acc[key] = v * w if s is None else s + v * w
    return sp_clean(acc)


def sp_matvec(a: dict, x: dict) -> dict:
    acc: dict = {}
    for (i, k), v in a.items():
        w = x.get(k)
        if w is not None:
            s = acc.get(i)
            acc[i] = v * w if s is None else s + v * w
    return {k: v for k, v in acc.items() if v != 0}


def to_dense(entries: dict, nrows: int, ncols: int, zero) -> list:
    out = [[zero] * ncols for _ in range(nrows)]
    for (r, c), v in entries.items():
        out[r][c] = v
    return out


def from_dense(rows) -> dict:
    return {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v != 0}


def dense_mul(a, b, zero):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            v = ai[t]
            if v != 0:
                bt = b[t]
                for j in range(m):
                    if bt[j] != 0:
                        oi[j] = oi[j] + v * bt[j]
    return out


def _inv(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def rref(rows):
    """Reduced row echelon form.  Returns ``(matrix, pivot_columns)``; input untouched."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def nullity(rows) -> int:
    if not rows:
        return 0
    return len(rows[0]) - rank(rows)


def inverse(rows, one, zero):
    n = len(rows)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red[:n]]
