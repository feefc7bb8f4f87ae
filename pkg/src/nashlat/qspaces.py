"""Subspace and rational-structure computations on K and K(i) matrices.

The workhorse is restrict_scalars: a K(i) matrix expands to a rational
matrix over the Q-basis {1, t, ..., t^(d-1)} x {1, sqrt(-1)}, turning every
Q-linear condition on complex field vectors into a rational nullspace.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, MixedFields
from .field import CKScalar, KScalar, NumberField, common_field
from .matrix import (DOM_Q, Mat, column_space_basis, dom_ck, dom_k, hstack,
                     nullspace, rank, rref, solve, vstack)


def field_of(M: Mat) -> NumberField:
    if M.dom.field is None:
        raise MixedFields("matrix has no coefficient field")
    return M.dom.field


def ck_promote(M: Mat) -> Mat:
    """View a K matrix inside K(i) with zero imaginary part."""
    if M.dom.name == "CK":
        return M
    fld = field_of(M)
    return M.map(lambda x: CKScalar(x, fld.zero), dom_ck(fld))


def re_mat(M: Mat) -> Mat:
    return M.map(lambda z: z.re, dom_k(field_of(M)))


def im_mat(M: Mat) -> Mat:
    return M.map(lambda z: z.im, dom_k(field_of(M)))


def mat_conj(M: Mat) -> Mat:
    return M.map(lambda z: z.conj())


def _coeff(x: KScalar, i: int) -> Fraction:
    return x.coeffs[i] if i < len(x.coeffs) else Fraction(0)


def restrict_scalars(M: Mat) -> Mat:
    """Rational expansion of a K(i) matrix: 2*d*rows x cols.

    Row block for source row i lists the d coefficients of the real part
    followed by the d coefficients of the imaginary part.  Q-linear
    combinations of columns vanish iff they vanish in the expansion.
    """
    fld = field_of(M)
    for r in M.data:
        for z in r:
            common_field(fld, z.field)
    d = fld.degree
    out = []
    for i in range(M.rows):
        for part in ("re", "im"):
            for k in range(d):
                out.append(tuple(_coeff(getattr(M.data[i][j], part), k)
                                 for j in range(M.cols)))
    return Mat(2 * d * M.rows, M.cols, tuple(out), DOM_Q)


def restrict_scalars_k(M: Mat) -> Mat:
    return restrict_scalars(ck_promote(M))


def unexpand(fld: NumberField, col, n: int) -> tuple:
    """Inverse of the restrict_scalars column layout: rational 2dn vector
    back to a CK n-vector."""
    d = fld.degree
    out = []
    for i in range(n):
        base = 2 * d * i
        re = fld.scalar(list(col[base:base + d]))
        im = fld.scalar(list(col[base + d:base + 2 * d]))
        out.append(CKScalar(re, im))
    return tuple(out)


def rational_kernel(M: Mat) -> Mat:
    """Canonical basis of {q in Q^cols : M q = 0} for a K(i) matrix."""
    return nullspace(restrict_scalars(M))


def rational_membership(span: Mat, v: Mat) -> bool:
    """Do the columns of v lie in the Q-span of the columns of span?"""
    return solve(restrict_scalars(span), restrict_scalars(v)) is not None


def k_membership(span: Mat, v: Mat) -> bool:
    """Field-coefficient membership (K or K(i) according to the domain)."""
    if span.dom.name != v.dom.name:
        v = ck_promote(v) if span.dom.name == "CK" else v
    return solve(span, v) is not None


def subspace_sum(A: Mat, B: Mat) -> Mat:
    if A.rows != B.rows:
        raise DimensionMismatch("sum of subspaces of different ambient spaces")
    return column_space_basis(hstack([A, B]))


def intersect_k(A: Mat, B: Mat) -> Mat:
    """Basis of the intersection of two field-coefficient column spans."""
    if A.rows != B.rows:
        raise DimensionMismatch("intersection of subspaces of different ambient spaces")
    if A.cols == 0 or B.cols == 0:
        return Mat.zeros(A.rows, 0, A.dom)
    N = nullspace(hstack([A, B]))
    cols = []
    for j in range(N.cols):
        x = N.col(j)[:A.cols]
        cols.append(tuple(sum((A.data[i][k] * x[k] for k in range(A.cols)), A.dom.zero)
                          for i in range(A.rows)))
    if not cols:
        return Mat.zeros(A.rows, 0, A.dom)
    return column_space_basis(Mat.from_cols(cols, A.dom, rows=A.rows))


def quotient_complement(fil: Mat, n: int) -> Mat:
    """Echelon complement of a K-subspace: the standard basis vectors at
    the non-pivot rows of the column echelon form."""
    fld = field_of(fil)
    R, pivots = rref(fil.T)
    piv_rows = set()
    for i in range(len(pivots)):
        piv_rows.add(pivots[i])
    cols = []
    for i in range(n):
        if i not in piv_rows:
            cols.append(tuple(fld.one if k == i else fld.zero for k in range(n)))
    return Mat.from_cols(cols, dom_k(fld), rows=n)


def quotient_projection(fil: Mat, n: int) -> Mat:
    """K-matrix extracting echelon-complement coordinates modulo span(fil)."""
    from .matrix import inverse
    fld = field_of(fil)
    Q = quotient_complement(fil, n)
    if fil.cols + Q.cols != n:
        raise DimensionMismatch("subspace basis is not independent")
    B = hstack([fil, Q]) if fil.cols else Q
    Binv = inverse(B)
    rows = Binv.data[fil.cols:]
    return Mat(Q.cols, n, rows, dom_k(fld))


def left_annihilator(W: Mat, n: int) -> Mat:
    """Rows f with f @ W = 0, spanning the annihilator of the column span."""
    if W.cols == 0:
        return Mat.identity(n, W.dom)
    return nullspace(W.T).T


def intersect_rational_with_complexified(L: Mat, W: Mat) -> tuple:
    """Q-basis of {v in Q-span(L columns) : v in C-span(W columns)}.

    W is a real K-subspace basis; returns (vectors, coefficients) where
    vectors = L @ coefficients is a CK matrix of basis vectors.
    """
    fld = common_field(field_of(L), field_of(W))
    F = left_annihilator(W, L.rows)
    cond = ck_promote(F) @ L
    q = rational_kernel(cond)
    return _combine(L, q), q


def intersect_rational_with_real(L: Mat, W: Mat) -> tuple:
    """Q-basis of {v in Q-span(L) : v real and re(v) in K-span(W)}."""
    fld = common_field(field_of(L), field_of(W))
    A, B = re_mat(L), im_mat(L)
    F = left_annihilator(W, L.rows)
    cond = vstack([ck_promote(B), ck_promote(F @ A)])
    q = rational_kernel(cond)
    return _combine(L, q), q


def sigma_eigen_coeffs(L: Mat, eps: int) -> Mat:
    """Rational coefficients q with sigma(L q) = eps * (L q)."""
    part = im_mat(L) if eps == 1 else re_mat(L)
    return rational_kernel(ck_promote(part))


def _combine(L: Mat, q: Mat) -> Mat:
    """CK matrix whose columns are L @ q_j for rational coefficient columns."""
    fld = field_of(L)
    Lq = L @ q.map(lambda x: fld.ck(x), dom_ck(fld)) if q.cols else Mat.zeros(L.rows, 0, L.dom)
    return Lq


def real_coordinate_stack(L: Mat) -> Mat:
    """K-matrix stacking real over imaginary coordinates (2n x cols)."""
    return vstack([re_mat(L), im_mat(L)])


def q_to_k(M: Mat, fld: NumberField) -> Mat:
    return M.map(lambda x: fld.scalar(x), dom_k(fld))


def q_to_ck(M: Mat, fld: NumberField) -> Mat:
    return M.map(lambda x: fld.ck(x), dom_ck(fld))


def z_to_k(M: Mat, fld: NumberField) -> Mat:
    return M.map(lambda x: fld.scalar(x), dom_k(fld))


def subspace_ops(op: str, *operands):
    """Dispatcher mirroring the kernel surface: sum | intersect |
    quotient_basis | membership.  Mixed intersections take a tag."""
    if op == "sum":
        return subspace_sum(*operands)
    if op == "intersect":
        a = operands[0]
        if isinstance(a, str):
            if a == "rational_with_complexified":
                return intersect_rational_with_complexified(*operands[1:])[0]
            if a == "rational_with_real":
                return intersect_rational_with_real(*operands[1:])[0]
            raise ValueError(f"unknown mixed intersect tag {a!r}")
        return intersect_k(*operands)
    if op == "quotient_basis":
        return quotient_complement(*operands)
    if op == "membership":
        return k_membership(*operands)
    raise ValueError(f"unknown subspace op {op!r}")
