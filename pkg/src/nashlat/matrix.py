"""Immutable dense matrices over an exact scalar domain, with Gaussian
elimination for every domain that supports exact division (Q, K, K(i)).

Integer lattice algorithms that must avoid division live in zlattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import DimensionMismatch
from .field import CKScalar, KScalar, NumberField


@dataclass(frozen=True)
class Domain:
    name: str
    zero: Any
    one: Any
    field: NumberField | None = None

    def __repr__(self):
        return f"Domain({self.name})"


DOM_Z = Domain("Z", 0, 1)
DOM_Q = Domain("Q", Fraction(0), Fraction(1))


def dom_k(fld: NumberField) -> Domain:
    return Domain("K", fld.zero, fld.one, fld)


def dom_ck(fld: NumberField) -> Domain:
    return Domain("CK", fld.ck_zero, fld.ck_one, fld)


def _same_dom(a: "Mat", b: "Mat") -> Domain:
    if a.dom.name != b.dom.name or a.dom.field != b.dom.field:
        raise DimensionMismatch(f"domain mismatch: {a.dom} vs {b.dom}")
    return a.dom


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    data: tuple
    dom: Domain

    @classmethod
    def from_rows(cls, rows_list, dom: Domain, cols: int | None = None) -> "Mat":
        rows_list = [tuple(r) for r in rows_list]
        if cols is None:
            if not rows_list:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows_list[0])
        for r in rows_list:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows_list), cols, tuple(rows_list), dom)

    @classmethod
    def from_cols(cls, cols_list, dom: Domain, rows: int | None = None) -> "Mat":
        cols_list = [tuple(c) for c in cols_list]
        if rows is None:
            if not cols_list:
                raise ValueError("rows is required for a matrix with no columns")
            rows = len(cols_list[0])
        for c in cols_list:
            if len(c) != rows:
                raise DimensionMismatch("ragged columns")
        data = tuple(tuple(c[i] for c in cols_list) for i in range(rows))
        return cls(rows, len(cols_list), data, dom)

    @classmethod
    def zeros(cls, rows: int, cols: int, dom: Domain) -> "Mat":
        return cls(rows, cols, tuple(tuple(dom.zero for _ in range(cols)) for _ in range(rows)), dom)

    @classmethod
    def identity(cls, n: int, dom: Domain) -> "Mat":
        return cls(n, n, tuple(tuple(dom.one if i == j else dom.zero for j in range(n)) for i in range(n)), dom)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i][j] for i in range(self.rows))

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(tuple(self.data[i][j] for i in range(self.rows)) for j in range(self.cols)),
                   self.dom)

    def map(self, fn: Callable, dom: Domain | None = None) -> "Mat":
        return Mat(self.rows, self.cols,
                   tuple(tuple(fn(x) for x in r) for r in self.data),
                   dom or self.dom)

    def __add__(self, other: "Mat") -> "Mat":
        dom = _same_dom(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        return Mat(self.rows, self.cols,
                   tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)),
                   dom)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.map(lambda x: -x)

    def __matmul__(self, other: "Mat") -> "Mat":
        dom = _same_dom(self, other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.T.data
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            out.append(tuple(
                sum((ri[k] * ot[j][k] for k in range(self.cols)), dom.zero)
                for j in range(other.cols)))
        return Mat(self.rows, other.cols, tuple(out), dom)

    def scale(self, c) -> "Mat":
        return self.map(lambda x: x * c)

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def __repr__(self):
        body = "; ".join(" ".join(repr(x) for x in r) for r in self.data)
        return f"Mat[{self.dom.name}]({self.rows}x{self.cols}: {body})"


def hstack(mats) -> Mat:
    mats = list(mats)
    dom = mats[0].dom
    rows = mats[0].rows
    for m in mats[1:]:
        _same_dom(mats[0], m)
        if m.rows != rows:
            raise DimensionMismatch("hstack row mismatch")
    data = tuple(tuple(x for m in mats for x in m.data[i]) for i in range(rows))
    return Mat(rows, sum(m.cols for m in mats), data, dom)


def vstack(mats) -> Mat:
    mats = list(mats)
    cols = mats[0].cols
    for m in mats[1:]:
        _same_dom(mats[0], m)
        if m.cols != cols:
            raise DimensionMismatch("vstack column mismatch")
    return Mat(sum(m.rows for m in mats), cols,
               tuple(r for m in mats for r in m.data), mats[0].dom)


def rref(M: Mat) -> tuple:
    """Reduced row echelon form; returns (R, pivot_columns)."""
    if M.dom.name == "Z":
        raise DimensionMismatch("rref needs a domain with division; use zlattice for Z")
    rows = [list(r) for r in M.data]
    pivots = []
    r = 0
    for c in range(M.cols):
        pr = None
        for i in range(r, M.rows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv_p = M.dom.one / rows[r][c]
        rows[r] = [x * inv_p for x in rows[r]]
        for i in range(M.rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return Mat(M.rows, M.cols, tuple(tuple(rw) for rw in rows), M.dom), pivots


def rank(M: Mat) -> int:
    return len(rref(M)[1])


def nullspace(M: Mat) -> Mat:
    """Canonical basis of the right kernel, one column per free variable."""
    R, pivots = rref(M)
    pivset = dict((c, i) for i, c in enumerate(pivots))
    free = [c for c in range(M.cols) if c not in pivset]
    cols = []
    for f in free:
        v = [M.dom.zero] * M.cols
        v[f] = M.dom.one
        for c, i in pivset.items():
            v[c] = -R.data[i][f]
        cols.append(v)
    return Mat.from_cols(cols, M.dom, rows=M.cols)


def solve(A: Mat, b: Mat) -> Mat | None:
    """One exact solution of A x = b (b may have several columns), else None."""
    if A.rows != b.rows:
        raise DimensionMismatch("solve: row mismatch")
    R, pivots = rref(hstack([A, b]))
    for i in range(len(pivots)):
        if pivots[i] >= A.cols:
            return None
    xcols = []
    for j in range(b.cols):
        x = [A.dom.zero] * A.cols
        for i, c in enumerate(pivots):
            x[c] = R.data[i][A.cols + j]
        xcols.append(x)
    return Mat.from_cols(xcols, A.dom, rows=A.cols)


def inverse(A: Mat) -> Mat:
    if A.rows != A.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    X = solve(A, Mat.identity(A.rows, A.dom))
    if X is None or rank(A) != A.rows:
        raise ZeroDivisionError("matrix is singular")
    return X

def det(A: Mat):
    if A.rows != A.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = A.rows
    rows = [list(r) for r in A.data]
    d = A.dom.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            return A.dom.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            d = -d
        d = d * rows[c][c]
        inv_p = A.dom.one / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv_p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d


def column_space_basis(M: Mat) -> Mat:
    """Canonical (reduced-echelon) basis of the column span."""
    R, pivots = rref(M.T)
    cols = [R.row(i) for i in range(len(pivots))]
    return Mat.from_cols(cols, M.dom, rows=M.rows)


def in_column_span(M: Mat, v: Mat) -> bool:
    """Does every column of v lie in the column span of M?"""
    return solve(M, v) is not None
