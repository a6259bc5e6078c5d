"""Exact sparse Gaussian elimination over any field whose elements support
``+ - * /`` and compare equal to 0 (Fraction, Fp).

Vectors are dicts ``{index: value}`` with no zero entries; a matrix is given
as a list of such row dicts plus a column count.  Pivoting is deterministic:
columns are scanned left to right and the first remaining row with a nonzero
entry becomes the pivot row.
"""
from __future__ import annotations

from dataclasses import dataclass

SparseVec = dict


def _axpy(y: SparseVec, a, x: SparseVec) -> SparseVec:
    """Return y + a*x."""
    out = dict(y)
    for j, v in x.items():
        s = out.get(j, 0) + a * v
        if s == 0:
            out.pop(j, None)
        else:
            out[j] = s
    return out


def _scale(x: SparseVec, a) -> SparseVec:
    return {j: a * v for j, v in x.items()}


@dataclass
class Echelon:
    """Reduced row echelon form: ``rows[r]`` has pivot ``pivots[r]`` equal to 1."""

    rows: list
    pivots: list
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: SparseVec) -> SparseVec:
        """Remainder of ``v`` after eliminating every pivot coordinate."""
        out = dict(v)
        for row, p in zip(self.rows, self.pivots):
            a = out.get(p, 0)
            if a != 0:
                out = _axpy(out, -a, row)
        return out

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)


def rref(rows: list, ncols: int) -> Echelon:
    work = [dict(r) for r in rows if r]
    pivot_rows: list = []
    pivots: list[int] = []
    for col in range(ncols):
        idx = next((k for k, r in enumerate(work) if r.get(col, 0) != 0), None)
        if idx is None:
            continue
        prow = work.pop(idx)
        prow = _scale(prow, 1 / prow[col]) if prow[col] != 1 else prow
        work = [_axpy(r, -r[col], prow) if r.get(col, 0) != 0 else r for r in work]
        work = [r for r in work if r]
        pivot_rows = [_axpy(r, -r[col], prow) if r.get(col, 0) != 0 else r for r in pivot_rows]
        pivot_rows.append(prow)
        pivots.append(col)
        if not work:
            break
    return Echelon(pivot_rows, pivots, ncols)


def rank(rows: list, ncols: int) -> int:
    return rref(rows, ncols).rank


def transpose(cols: list, nrows: int) -> list:
    """Turn a list of column vectors into a list of row vectors."""
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def nullspace(rows: list, ncols: int) -> list:
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    ech = rref(rows, ncols)
    pivset = set(ech.pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: 1}
        for row, p in zip(ech.rows, ech.pivots):
            a = row.get(f, 0)
            if a != 0:
                v[p] = -a
        basis.append(v)
    return basis


def solve(rows: list, ncols: int, b: SparseVec):
    """One solution x of A x = b (free variables set to zero), or None."""
    nrows = len(rows)
    aug = [dict(r) for r in rows]
    for i, v in b.items():
        if i >= nrows:
            raise IndexError(f"right-hand side index {i} outside {nrows} rows")
        aug[i][ncols] = v
    ech = rref(aug, ncols + 1)
    if ncols in ech.pivots:
        return None
    x = {}
    for row, p in zip(ech.rows, ech.pivots):
        v = row.get(ncols, 0)
        if v != 0:
            x[p] = v
    return x


def mat_vec(rows: list, x: SparseVec) -> SparseVec:
    out = {}
    for i, row in enumerate(rows):
        s = 0
        for j, v in row.items():
            xj = x.get(j)
            if xj is not None:
                s = s + v * xj
        if s != 0:
            out[i] = s
    return out


def mat_mul(a_rows: list, b_rows: list) -> list:
    """Product of sparse row-major matrices."""
    out = []
    for row in a_rows:
        acc: dict = {}
        for k, v in row.items():
            for j, w in b_rows[k].items():
                acc[j] = acc.get(j, 0) + v * w
        out.append({j: v for j, v in acc.items() if v != 0})
    return out


def complement_basis(subspace: list, vectors: list, ncols: int) -> list:
    """Vectors spanning span(vectors) modulo span(subspace), in RREF.

    Every returned vector has zero entries on the pivot columns of the
    reduced ``subspace`` basis.
    """
    sub = rref(subspace, ncols)
    reduced = [sub.reduce(v) for v in vectors]
    return rref([r for r in reduced if r], ncols).rows
