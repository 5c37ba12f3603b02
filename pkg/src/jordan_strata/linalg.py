"""Exact linear algebra over Scalar entries (Q or Q(i)).

Matrices are tuples of row-tuples.  Everything is fraction-exact; the only
optimization is an integer-scaled fast path for products of purely rational
matrices, which the Lie-algebra layer leans on heavily.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import Scalar


def mat(rows):
    return tuple(tuple(r) for r in rows)


def zeros(m, n, gaussian=False):
    z = Scalar.zero(gaussian)
    return tuple((z,) * n for _ in range(m))


def identity(n, gaussian=False):
    z, o = Scalar.zero(gaussian), Scalar.one(gaussian)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def conj_transpose(a):
    return tuple(tuple(x.conjugate() for x in col) for col in zip(*a))


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(a, s):
    return tuple(tuple(s * x for x in row) for row in a)


def neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mul(a, b):
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            if acc is None:
                acc = Scalar.zero(row[0].gaussian)
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x.is_zero() or y.is_zero():
                continue
            term = x * y
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else Scalar.zero(row[0].gaussian))
    return tuple(out)


def is_zero_matrix(a):
    return all(x.is_zero() for row in a for x in row)


# -- fast path for rational (Fraction-entry) matrices -------------------------


def frac_mat(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def _int_scaled(a):
    den = 1
    for row in a:
        for x in row:
            d = x.denominator
            den = den * d // gcd(den, d)
    return [[int(x * den) for x in row] for row in a], den


def frac_mul(a, b):
    """Product of Fraction matrices via a single integer rescale."""
    ai, da = _int_scaled(a)
    bi, db = _int_scaled(b)
    bt = list(zip(*bi))
    den = da * db
    return tuple(
        tuple(Fraction(sum(x * y for x, y in zip(row, col)), den) for col in bt)
        for row in ai
    )


def frac_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def frac_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def frac_scale(a, s):
    return tuple(tuple(s * x for x in row) for row in a)


def frac_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def frac_commutator(a, b):
    return frac_sub(frac_mul(a, b), frac_mul(b, a))


def frac_rank(rows) -> int:
    """Rank of a Fraction matrix by integer fraction-free elimination."""
    if not rows:
        return 0
    m, _ = _int_scaled(rows)
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                f = m[r][col]
                m[r] = [pv * x - f * y for x, y in zip(m[r], m[row])]
                g = 0
                for x in m[r]:
                    g = gcd(g, x)
                if g > 1:
                    m[r] = [x // g for x in m[r]]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


# -- generic elimination over Scalar fields ------------------------------------


def rank(a) -> int:
    """Rank over the entry field (works for Q and Q(i) entries alike)."""
    if not a:
        return 0
    rows = [list(r) for r in a]
    nrows, ncols = len(rows), len(rows[0])
    rnk = 0
    r0 = 0
    for c in range(ncols):
        piv = None
        for r in range(r0, nrows):
            if not rows[r][c].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        inv = rows[r0][c].inverse()
        rows[r0] = [inv * x for x in rows[r0]]
        for r in range(nrows):
            if r != r0 and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[r0])]
        rnk += 1
        r0 += 1
        if r0 == nrows:
            break
    return rnk


def solve(a, b):
    """One solution x of a x = b over the entry field, or None.

    ``b`` is a vector; ``a`` may be rectangular.
    """
    if not a:
        return None
    nrows, ncols = len(a), len(a[0])
    gaussian = a[0][0].gaussian
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    pivots = []
    r0 = 0
    for c in range(ncols):
        piv = None
        for r in range(r0, nrows):
            if not aug[r][c].is_zero():
                piv = r
                break
        if piv is None:
            continue
        aug[r0], aug[piv] = aug[piv], aug[r0]
        inv = aug[r0][c].inverse()
        aug[r0] = [inv * x for x in aug[r0]]
        for r in range(nrows):
            if r != r0 and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[r0])]
        pivots.append(c)
        r0 += 1
        if r0 == nrows:
            break
    for r in range(r0, nrows):
        if not aug[r][ncols].is_zero():
            return None
    x = [Scalar.zero(gaussian)] * ncols
    for r, c in enumerate(pivots):
        x[c] = aug[r][ncols]
    return tuple(x)


def inverse(a):
    n = len(a)
    gaussian = a[0][0].gaussian
    aug = [list(row) + list(idrow) for row, idrow in zip(a, identity(n, gaussian))]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not aug[r][c].is_zero():
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [inv * x for x in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def kernel_basis(a):
    """Basis of the right kernel of ``a`` over the entry field."""
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    gaussian = a[0][0].gaussian
    rows = [list(r) for r in a]
    pivots = {}
    r0 = 0
    for c in range(ncols):
        piv = None
        for r in range(r0, nrows):
            if not rows[r][c].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[r0], rows[piv] = rows[piv], rows[r0]
        inv = rows[r0][c].inverse()
        rows[r0] = [inv * x for x in rows[r0]]
        for r in range(nrows):
            if r != r0 and not rows[r][c].is_zero():
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[r0])]
        pivots[c] = r0
        r0 += 1
        if r0 == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [Scalar.zero(gaussian)] * ncols
        v[fc] = Scalar.one(gaussian)
        for c, r in pivots.items():
            v[c] = -rows[r][fc]
        out.append(tuple(v))
    return out


def determinant(a):
    """Cofactor-expansion determinant over a commutative Scalar ring.

    Deliberately naive: this is the independent oracle the Jordan-algebra
    determinant is checked against, so it must not share code with it.
    """
    n = len(a)
    if n == 1:
        return a[0][0]
    gaussian = a[0][0].gaussian
    acc = Scalar.zero(gaussian)
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = tuple(tuple(row[:j] + row[j + 1 :]) for row in a[1:])
        term = a[0][j] * determinant(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def congruent_diagonal(a):
    """Diagonal entries of a congruence-diagonalization of symmetric ``a``.

    Returns (diag, L) with a = L D L^T over the entry field, symmetric
    pivoting only (char 0, so an off-diagonal pivot can always be moved to
    the diagonal by a row+col addition).
    """
    n = len(a)
    gaussian = a[0][0].gaussian
    m = [list(r) for r in a]
    basis_change = [list(r) for r in identity(n, gaussian)]

    def row_col_add(i, j, f):
        # row_i += f * row_j, col_i += f * col_j;  basis vector b_i += f b_j
        for c in range(n):
            m[i][c] = m[i][c] + f * m[j][c]
        for r in range(n):
            m[r][i] = m[r][i] + f * m[r][j]
        for c in range(n):
            basis_change[i][c] = basis_change[i][c] + f * basis_change[j][c]

    def swap(i, j):
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        basis_change[i], basis_change[j] = basis_change[j], basis_change[i]

    one = Scalar.one(gaussian)
    for k in range(n):
        if m[k][k].is_zero():
            pivot = None
            for r in range(k + 1, n):
                if not m[r][r].is_zero():
                    pivot = r
                    break
            if pivot is not None:
                swap(k, pivot)
            else:
                found = None
                for r in range(k, n):
                    for c in range(r + 1, n):
                        if not m[r][c].is_zero():
                            found = (r, c)
                            break
                    if found:
                        break
                if found is None:
                    break
                r, c = found
                row_col_add(r, c, one)
                swap(k, r)
        if m[k][k].is_zero():
            continue
        inv = m[k][k].inverse()
        for r in range(k + 1, n):
            if not m[r][k].is_zero():
                row_col_add(r, k, -(m[r][k] * inv))
    diag = tuple(m[k][k] for k in range(n))
    return diag, tuple(tuple(r) for r in basis_change)


def pinv_psd(a):
    """Moore-Penrose inverse of a (conjugate-)symmetric PSD Scalar matrix.

    Uses a column basis V of a: pinv = V (V* a V)^-1 V*.
    """
    n = len(a)
    cols = transpose(a)
    chosen = []
    for j in range(n):
        trial = chosen + [cols[j]]
        if rank(tuple(trial)) == len(trial):
            chosen.append(cols[j])
    if not chosen:
        return zeros(n, n, a[0][0].gaussian)
    v = transpose(tuple(chosen))  # n x k
    vs = conj_transpose(v)
    core = inverse(mul(vs, mul(a, v)))
    return mul(v, mul(core, vs))
