"""Small dense matrices over a Cayley-Dickson algebra (levels 0..2 only:
matrix algebra needs associativity, so the octonions are excluded here).

Rows are tuples of CDNumber; entries must share level and base ring.  Used by
the momentum-map layer for the V = K^6 matrix models.
"""

from __future__ import annotations

from fractions import Fraction

from .cayley_dickson import CDNumber, cd_mul
from .scalars import Scalar


def zero(m, n, level, gaussian=False):
    z = CDNumber.zero(level, gaussian)
    return tuple((z,) * n for _ in range(m))


def identity(n, level, gaussian=False):
    z, o = CDNumber.zero(level, gaussian), CDNumber.one(level, gaussian)
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def from_rows(rows):
    return tuple(tuple(r) for r in rows)


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def scale(a, s) -> tuple:
    """Left scalar multiple; s may be a Scalar or CDNumber."""
    if isinstance(s, Scalar):
        return tuple(tuple(x.scale(s) for x in row) for row in a)
    return tuple(tuple(cd_mul(s, x) for x in row) for row in a)


def mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    level = a[0][0].level
    gaussian = a[0][0].gaussian
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = CDNumber.zero(level, gaussian)
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + cd_mul(x, y)
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def conj_transpose(a):
    return tuple(tuple(x.conjugate() for x in col) for col in zip(*a))


def transpose(a):
    return tuple(zip(*a))


def is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def is_hermitian(a):
    return a == conj_transpose(a)


def equal(a, b):
    return a == b


def trace_real(a) -> Scalar:
    """Real part of the trace (a base-ring scalar)."""
    g = a[0][0].gaussian
    acc = Scalar.zero(g)
    for i in range(len(a)):
        acc = acc + a[i][i].real()
    return acc


def inverse(a):
    """Inverse over an associative division level (0..2, rational base).

    Row operations multiply from the left, which is the correct side for
    solving g X = I over a noncommutative division ring.
    """
    n = len(a)
    level = a[0][0].level
    gaussian = a[0][0].gaussian
    if gaussian and level > 0:
        raise ValueError("inverse over a non-division ring is not supported")
    aug = [list(row) + list(idrow) for row, idrow in zip(a, identity(n, level, gaussian))]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not aug[r][c].is_zero():
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        # left-multiply the row by the entry inverse
        x = aug[c][c]
        xinv = x.conjugate().scale(x.norm().inverse())
        aug[c] = [cd_mul(xinv, y) for y in aug[c]]
        for r in range(n):
            if r != c and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [y - cd_mul(f, z) for y, z in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def lift_scalar_matrix(m, level, gaussian=False):
    """Embed a Scalar matrix as a CD matrix of the given level."""
    out = []
    for row in m:
        out.append(tuple(CDNumber.from_scalar(level, s if isinstance(s, Scalar) else Scalar(Fraction(s), 0, gaussian)) for s in row))
    return tuple(out)
