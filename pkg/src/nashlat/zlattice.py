"""Integer lattice algebra: Hermite and Smith normal forms with unimodular
transforms, saturation, dual preimages, kernels and basis completion.

Conventions.  Column HNF: H = M @ U with U unimodular; pivots occur in
strictly increasing row order, are positive, and every entry to the right
of a pivot in its row is zero while entries to its left are reduced into
[0, pivot).  SNF: L @ M @ R = D diagonal with d1 | d2 | ... and di >= 0.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatch
from .matrix import DOM_Q, DOM_Z, Mat, hstack, nullspace


def _as_lists(M: Mat):
    return [list(r) for r in M.data]


def _mat(rows, cols, data) -> Mat:
    return Mat(rows, cols, tuple(tuple(int(x) for x in r) for r in data), DOM_Z)


def row_hnf(M: Mat) -> tuple:
    """Row Hermite normal form: (H, U) with U @ M = H, U unimodular."""
    a = _as_lists(M)
    n, m = M.rows, M.cols
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        # gcd-eliminate below row r in column c
        piv = None
        for i in range(r, n):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, n):
            while a[i][c] != 0:
                q = a[r][c] // a[i][c]
                a[r] = [x - q * y for x, y in zip(a[r], a[i])]
                u[r] = [x - q * y for x, y in zip(u[r], u[i])]
                a[r], a[i] = a[i], a[r]
                u[r], u[i] = u[i], u[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == n:
            break
    return _mat(n, m, a), _mat(n, n, u)


def col_hnf(M: Mat) -> tuple:
    """Column Hermite normal form: (H, U) with M @ U = H, U unimodular."""
    H, U = row_hnf(M.T)
    return H.T, U.T


def hnf(M: Mat) -> Mat:
    return col_hnf(M)[0]


def snf(M: Mat) -> tuple:
    """Smith normal form: (D, L, R, Linv, Rinv) with L @ M @ R = D."""
    a = _as_lists(M)
    n, m = M.rows, M.cols
    L = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    Li = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    R = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    Ri = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_op(i, j, q):  # row_i -= q*row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        L[i] = [x - q * y for x, y in zip(L[i], L[j])]
        for k in range(n):
            Li[k][j] += q * Li[k][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]
        for k in range(n):
            Li[k][i], Li[k][j] = Li[k][j], Li[k][i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        L[i] = [-x for x in L[i]]
        for k in range(n):
            Li[k][i] = -Li[k][i]

    def col_op(j, i, q):  # col_j -= q*col_i
        for k in range(n):
            a[k][j] -= q * a[k][i]
        for k in range(m):
            R[k][j] -= q * R[k][i]
        Ri[i] = [x + q * y for x, y in zip(Ri[i], Ri[j])]

    def col_swap(i, j):
        for k in range(n):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(m):
            R[k][i], R[k][j] = R[k][j], R[k][i]
        Ri[i], Ri[j] = Ri[j], Ri[i]

    def clear_position(t):
        while True:
            # move a nonzero into (t, t)
            piv = None
            for i in range(t, n):
                for j in range(t, m):
                    if a[i][j] != 0:
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                return False
            if piv[0] != t:
                row_swap(t, piv[0])
            if piv[1] != t:
                col_swap(t, piv[1])
            # eliminate column t below, then row t to the right
            dirty = False
            for i in range(t + 1, n):
                while a[i][t] != 0:
                    if abs(a[i][t]) < abs(a[t][t]) or a[t][t] == 0:
                        row_swap(t, i)
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
            for j in range(t + 1, m):
                while a[t][j] != 0:
                    if abs(a[t][j]) < abs(a[t][t]):
                        col_swap(t, j)
                        dirty = True
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, n)):
                return True

    k = min(n, m)
    for t in range(k):
        if not clear_position(t):
            break
        if a[t][t] < 0:
            row_neg(t)
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for t in range(k - 1):
            dt, dn = a[t][t], a[t + 1][t + 1]
            if dt != 0 and dn % dt != 0:
                col_op(t, t + 1, -1)  # col_t += col_{t+1}
                clear_position(t)
                if a[t][t] < 0:
                    row_neg(t)
                for s in range(t + 1, k):
                    clear_position(s)
                    if a[s][s] < 0:
                        row_neg(s)
                changed = True
    return (_mat(n, m, a), _mat(n, n, L), _mat(m, m, R),
            _mat(n, n, Li), _mat(m, m, Ri))


def det_int(M: Mat) -> int:
    if M.rows != M.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    from .matrix import det as qdet
    return int(qdet(M.map(Fraction, DOM_Q)))


def is_unimodular(M: Mat) -> bool:
    return M.rows == M.cols and abs(det_int(M)) == 1


def saturation(M: Mat) -> Mat:
    """Basis of the saturation of the column span of M in Z^n."""
    D, L, R, Li, Ri = snf(M)
    keep = [i for i in range(min(M.rows, M.cols)) if D.data[i][i] != 0]
    cols = [Li.col(i) for i in keep]
    if not cols:
        return Mat.zeros(M.rows, 0, DOM_Z)
    return hnf(Mat.from_cols(cols, DOM_Z, rows=M.rows))


def dual_preimage(A: Mat) -> Mat:
    """Z-basis of {x in Z^n : A @ x is integral}, A rational (m x n)."""
    if A.dom.name not in ("Q", "Z"):
        raise DimensionMismatch("dual_preimage expects a rational matrix")
    Aq = A.map(Fraction, DOM_Q)
    if A.rows == 0 or A.cols == 0:
        return Mat.identity(A.cols, DOM_Z)
    d = 1
    for r in Aq.data:
        for x in r:
            d = lcm(d, x.denominator)
    B = Aq.map(lambda x: int(x * d), DOM_Z)
    D, L, R, Li, Ri = snf(B)
    mults = []
    for j in range(A.cols):
        dj = D.data[j][j] if j < min(D.rows, D.cols) else 0
        mults.append(d // gcd(dj, d) if dj != 0 else 1)
    cols = [tuple(mults[j] * x for x in R.col(j)) for j in range(A.cols)]
    return hnf(Mat.from_cols(cols, DOM_Z, rows=A.cols))


def integer_kernel(M: Mat) -> Mat:
    """Saturated Z-basis of {x in Z^m : M @ x = 0} for rational M."""
    Mq = M.map(Fraction, DOM_Q) if M.dom.name == "Z" else M
    N = nullspace(Mq)
    if N.cols == 0:
        return Mat.zeros(M.cols, 0, DOM_Z)
    cols = []
    for j in range(N.cols):
        c = N.col(j)
        d = lcm(*[x.denominator for x in c]) if c else 1
        cols.append(tuple(int(x * d) for x in c))
    return saturation(Mat.from_cols(cols, DOM_Z, rows=M.cols))


def complete_basis(K0: Mat) -> Mat:
    """Columns completing the saturated sublattice K0 to a basis of Z^m.

    The result is reduced against K0 (entries in pivot rows of hnf(K0)
    lie in [0, pivot)) and normalized so that when K0 consists of standard
    basis vectors the completion is the complementary identity block.
    """
    m, s = K0.rows, K0.cols
    if s == 0:
        return Mat.identity(m, DOM_Z)
    D, L, R, Li, Ri = snf(K0)
    for i in range(s):
        if D.data[i][i] != 1:
            raise DimensionMismatch("complete_basis requires a saturated sublattice")
    B = [list(Li.col(j)) for j in range(s, m)]
    H, _ = col_hnf(K0)
    piv_rows = []
    for j in range(H.cols):
        pr = next(i for i in range(m) if H.data[i][j] != 0)
        piv_rows.append((pr, j))
    other_rows = [i for i in range(m) if i not in {pr for pr, _ in piv_rows}]
    # canonicalize the projection to the non-pivot rows
    proj = Mat.from_rows([[b[i] for b in B] for i in other_rows], DOM_Z, cols=len(B))
    Hp, Up = col_hnf(proj)
    Bm = Mat.from_cols(B, DOM_Z, rows=m) @ Up
    B = [list(Bm.col(j)) for j in range(Bm.cols)]
    # reduce against K0 at its pivot rows
    for b in B:
        for pr, j in piv_rows:
            q = b[pr] // H.data[pr][j]
            if q:
                for i in range(m):
                    b[i] -= q * H.data[i][j]
    return Mat.from_cols(B, DOM_Z, rows=m)


def solve_integer(A: Mat, b: Mat) -> Mat | None:
    """Integer solution columns of A x = b over Q, or None if any is non-integral."""
    from .matrix import solve
    Aq = A.map(Fraction, DOM_Q) if A.dom.name == "Z" else A
    bq = b.map(Fraction, DOM_Q) if b.dom.name == "Z" else b
    x = solve(Aq, bq)
    if x is None:
        return None
    for r in x.data:
        for v in r:
            if v.denominator != 1:
                return None
    return x.map(lambda v: int(v), DOM_Z)


def lattice_algebra(op: str, *operands):
    """Dispatcher over the integer-lattice toolkit."""
    if op == "hnf":
        return col_hnf(*operands)
    if op == "snf":
        D, L, R, _, _ = snf(*operands)
        return D, L, R
    if op == "dual_preimage":
        return dual_preimage(*operands)
    if op == "saturation":
        return saturation(*operands)
    raise ValueError(f"unknown lattice_algebra op {op!r}")
