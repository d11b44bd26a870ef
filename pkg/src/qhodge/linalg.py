"""Exact Gaussian elimination over ScalarQ.

Vectors are sparse dicts ``{index: ScalarQ}`` with no stored zeros; matrices
are lists of rows (dense) or lists of sparse columns, as noted per function.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, ScalarQ


class NotInSpanError(ValueError):
    """The target vector is not a combination of the given columns."""


# -- sparse vectors -------------------------------------------------------------

def vadd(a: dict, b: dict, cb: ScalarQ = ONE) -> dict:
    """a + cb*b as a new sparse vector."""
    out = dict(a)
    if cb.is_zero():
        return out
    for k, v in b.items():
        val = out.get(k, ZERO) + cb * v
        if val.is_zero():
            out.pop(k, None)
        else:
            out[k] = val
    return out


def vaccumulate(acc: dict, b: dict, cb: ScalarQ = ONE) -> None:
    """In-place acc += cb*b."""
    if cb.is_zero():
        return
    for k, v in b.items():
        val = acc.get(k, ZERO) + cb * v
        if val.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = val


def vscale(a: dict, c: ScalarQ) -> dict:
    if c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def vsub(a: dict, b: dict) -> dict:
    return vadd(a, b, -ONE)


def vratio(a: dict, b: dict):
    """The scalar r with a = r*b, or None when a is not a multiple of b."""
    if not b:
        return None
    if set(a) != set(b):
        return None
    r = None
    for k, v in a.items():
        x = v / b[k]
        if r is None:
            r = x
        elif x != r:
            return None
    return r


def apply_columns(cols: Sequence[dict], vec: dict) -> dict:
    """Matrix (list of sparse columns) times sparse vector."""
    out: dict = {}
    for j, c in vec.items():
        vaccumulate(out, cols[j], c)
    return out


# -- elimination ----------------------------------------------------------------

def _eliminate(rows: list[list[ScalarQ]], ncols: int):
    """Reduced row echelon form in place; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows: Sequence[Sequence[ScalarQ]]) -> int:
    """Rank of a dense matrix given as rows."""
    rows = [list(r) for r in rows if any(not v.is_zero() for v in r)]
    if not rows:
        return 0
    return len(_eliminate(rows, len(rows[0])))


def sparse_rank(cols: Iterable[dict]) -> int:
    """Rank of a set of sparse vectors."""
    cols = [c for c in cols if c]
    if not cols:
        return 0
    keys = sorted(set().union(*cols))
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for c in cols:
        row = [ZERO] * len(keys)
        for k, v in c.items():
            row[pos[k]] = v
        rows.append(row)
    # rank(A) = rank(A^T): eliminate with the vectors as rows.
    return len(_eliminate(rows, len(keys)))


def nullspace(rows: Sequence[Sequence[ScalarQ]], ncols: int) -> list[list[ScalarQ]]:
    """Basis of {x : M x = 0} for a dense matrix M given as rows."""
    work = [list(r) for r in rows if any(not v.is_zero() for v in r)]
    pivots = _eliminate(work, ncols) if work else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for i, pc in enumerate(pivots):
            x[pc] = -work[i][f]
        basis.append(x)
    return basis


def solve_in_span(columns: Sequence[dict], target: dict) -> list[ScalarQ]:
    """Coefficients c with sum_j c_j columns[j] = target.

    The columns must be linearly independent; raises NotInSpanError when the
    target has a nonzero residual.
    """
    keys = sorted(set().union(set(target), *[set(c) for c in columns]))
    n = len(columns)
    rows = [[c.get(k, ZERO) for c in columns] + [target.get(k, ZERO)] for k in keys]
    pivots = _eliminate(rows, n)
    if len(pivots) < n:
        raise ValueError("columns are linearly dependent")
    for row in rows[len(pivots):]:
        if not row[-1].is_zero():
            raise NotInSpanError("target is not in the span of the columns")
    out = [ZERO] * n
    for i, pc in enumerate(pivots):
        out[pc] = rows[i][-1]
    return out


def determinant(rows: Sequence[Sequence[ScalarQ]]) -> ScalarQ:
    """Determinant of a small dense square matrix by elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if not m[i][c].is_zero():
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det
