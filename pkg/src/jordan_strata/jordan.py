"""Rank-3 Jordan algebras of hermitian 3x3 matrices over R, C, H, O.

A JordanElement stores the hermitian matrix

        [ a    z    y  ]
        [ z*   b    x  ]          diag = (a, b, c),  off = (x, y, z)
        [ y*   x*   c  ]

with a, b, c scalars and x = X_23, y = X_13, z = X_12 Cayley-Dickson numbers
of the level matching the algebra tag.  Over the rational base ring these are
the four euclidean algebras; swapping the base ring to Q(i) gives their
complexifications.

The cubic norm is

    det X = abc - a N(x) - b N(y) - c N(z) + 2 Re((z x) conj(y))

and the adjugate is sharp(X) = X.X - tr(X) X + sigma2(X) I; the convention is
pinned by three independent oracles exercised in the tests (classical
determinants for R and C, X o sharp(X) = det(X) I everywhere, and the
quadratic-representation multiplicativity of det).

Matrix models used for rank identification:

  * algebra R: the element is itself a symmetric 3x3 scalar matrix;
  * algebra C: entry a + b e1 maps to the plain matrix entry a + b i; the
    mirror entry then carries the transpose, so the complexified algebra is
    isomorphic to all of M3 with symmetrized matrix product;
  * algebra H: quaternions embed in 2x2 complex blocks via
        1 -> [[1,0],[0,1]],  e1 -> [[i,0],[0,-i]],
        e2 -> [[0,1],[-1,0]], e3 -> [[0,i],[i,0]],
    and X maps to psi(X) * J6 with J6 = diag(J2, J2, J2),
    J2 = [[0,1],[-1,0]], which is skew-symmetric; Jordan rank is half the
    matrix rank there, and the pfaffian is normalized by Pf(J6) = +1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .cayley_dickson import CDNumber, LEVEL_OF_ALGEBRA, cd_mul
from .scalars import RingMismatch, Scalar

ALGEBRAS = ("R", "C", "H", "O")


class Sigma(NamedTuple):
    """Coefficients of the generic cubic t^3 - tr t^2 + sigma2 t - det."""

    tr: Scalar
    sigma2: Scalar
    det: Scalar


class JordanElement:
    __slots__ = ("algebra", "diag", "off")

    def __init__(self, algebra: str, diag, off):
        if algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra tag {algebra!r}")
        level = LEVEL_OF_ALGEBRA[algebra]
        diag = tuple(diag)
        off = tuple(off)
        if len(diag) != 3 or len(off) != 3:
            raise ValueError("need 3 diagonal scalars and 3 off-diagonal entries")
        g = diag[0].gaussian
        if any(s.gaussian != g for s in diag):
            raise RingMismatch("mixed base rings on the diagonal")
        for q in off:
            if q.level != level or q.gaussian != g:
                raise RingMismatch("off-diagonal entry has wrong level or ring")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "off", off)

    def __setattr__(self, name, value):
        raise AttributeError("JordanElement is immutable")

    # -- basic structure -------------------------------------------------------

    @property
    def gaussian(self) -> bool:
        return self.diag[0].gaussian

    @property
    def level(self) -> int:
        return LEVEL_OF_ALGEBRA[self.algebra]

    @staticmethod
    def zero(algebra: str, gaussian=False) -> "JordanElement":
        z = Scalar.zero(gaussian)
        q = CDNumber.zero(LEVEL_OF_ALGEBRA[algebra], gaussian)
        return JordanElement(algebra, (z, z, z), (q, q, q))

    @staticmethod
    def identity(algebra: str, gaussian=False) -> "JordanElement":
        o = Scalar.one(gaussian)
        q = CDNumber.zero(LEVEL_OF_ALGEBRA[algebra], gaussian)
        return JordanElement(algebra, (o, o, o), (q, q, q))

    @staticmethod
    def diagonal(algebra: str, a, b, c, gaussian=False) -> "JordanElement":
        conv = lambda v: v if isinstance(v, Scalar) else Scalar(Fraction(v), 0, gaussian)
        q = CDNumber.zero(LEVEL_OF_ALGEBRA[algebra], gaussian)
        return JordanElement(algebra, (conv(a), conv(b), conv(c)), (q, q, q))

    def complexify(self) -> "JordanElement":
        return JordanElement(
            self.algebra,
            tuple(s.to_gaussian() for s in self.diag),
            tuple(q.complexify() for q in self.off),
        )

    def _check(self, other: "JordanElement"):
        if not isinstance(other, JordanElement):
            raise TypeError(f"expected JordanElement, got {type(other).__name__}")
        if other.algebra != self.algebra or other.gaussian != self.gaussian:
            raise RingMismatch("algebra or base-ring tag mismatch")

    def __add__(self, other):
        self._check(other)
        return JordanElement(
            self.algebra,
            tuple(a + b for a, b in zip(self.diag, other.diag)),
            tuple(a + b for a, b in zip(self.off, other.off)),
        )

    def __sub__(self, other):
        self._check(other)
        return JordanElement(
            self.algebra,
            tuple(a - b for a, b in zip(self.diag, other.diag)),
            tuple(a - b for a, b in zip(self.off, other.off)),
        )

    def __neg__(self):
        return JordanElement(
            self.algebra, tuple(-a for a in self.diag), tuple(-q for q in self.off)
        )

    def scale(self, s: Scalar) -> "JordanElement":
        if not isinstance(s, Scalar):
            s = Scalar(Fraction(s), 0, self.gaussian)
        return JordanElement(
            self.algebra,
            tuple(s * a for a in self.diag),
            tuple(q.scale(s) for q in self.off),
        )

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.diag) and all(q.is_zero() for q in self.off)

    def __eq__(self, other):
        if not isinstance(other, JordanElement):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.gaussian == other.gaussian
            and self.diag == other.diag
            and self.off == other.off
        )

    def __hash__(self):
        return hash((self.algebra, self.diag, self.off))

    def __repr__(self):
        return (
            f"JordanElement({self.algebra}, diag={[str(s) for s in self.diag]}, "
            f"off={self.off!r})"
        )

    # -- matrix view over the division algebra ---------------------------------

    def to_matrix(self):
        x, y, z = self.off
        d = [CDNumber.from_scalar(self.level, s) for s in self.diag]
        return (
            (d[0], z, y),
            (z.conjugate(), d[1], x),
            (y.conjugate(), x.conjugate(), d[2]),
        )

    @staticmethod
    def from_matrix(algebra: str, m) -> "JordanElement":
        """Read a hermitian 3x3 CDNumber matrix back into storage form."""
        for i in range(3):
            if not m[i][i].is_real():
                raise ValueError("non-real diagonal entry")
            for j in range(i + 1, 3):
                if m[j][i] != m[i][j].conjugate():
                    raise ValueError("matrix is not hermitian")
        diag = tuple(m[i][i].real() for i in range(3))
        off = (m[1][2], m[0][2], m[0][1])
        return JordanElement(algebra, diag, off)

    # -- coordinates (used by the operator layer) -------------------------------

    def coords(self):
        """Flat coordinate tuple: 3 diagonal scalars then 3 * 2^level slots."""
        out = list(self.diag)
        for q in self.off:
            out.extend(q.coeffs)
        return tuple(out)

    @staticmethod
    def from_coords(algebra: str, coords, gaussian=False) -> "JordanElement":
        level = LEVEL_OF_ALGEBRA[algebra]
        width = 1 << level
        diag = tuple(coords[:3])
        off = []
        pos = 3
        for _ in range(3):
            off.append(CDNumber(level, coords[pos : pos + width]))
            pos += width
        return JordanElement(algebra, diag, off)

    @staticmethod
    def space_dim(algebra: str) -> int:
        return 3 + 3 * (1 << LEVEL_OF_ALGEBRA[algebra])

    @staticmethod
    def space_basis(algebra: str, gaussian=False):
        dim = JordanElement.space_dim(algebra)
        out = []
        for k in range(dim):
            coords = [Scalar.zero(gaussian)] * dim
            coords[k] = Scalar.one(gaussian)
            out.append(JordanElement.from_coords(algebra, coords, gaussian))
        return out

    def split_real_imag(self):
        """A Gaussian-base element as (real part, imaginary part) over Q."""
        if not self.gaussian:
            raise ValueError("element is not complexified")
        re_coords, im_coords = [], []
        for c in self.coords():
            re_coords.append(Scalar(c.re))
            im_coords.append(Scalar(c.im))
        return (
            JordanElement.from_coords(self.algebra, re_coords),
            JordanElement.from_coords(self.algebra, im_coords),
        )

    @staticmethod
    def combine_real_imag(re_part: "JordanElement", im_part: "JordanElement"):
        coords = [
            Scalar(a.re, b.re, gaussian=True)
            for a, b in zip(re_part.coords(), im_part.coords())
        ]
        return JordanElement.from_coords(re_part.algebra, coords, gaussian=True)

    # -- JSON --------------------------------------------------------------------

    def to_json(self):
        return {
            "algebra": self.algebra,
            "complexified": self.gaussian,
            "diag": [s.to_json() for s in self.diag],
            "off": [q.to_json() for q in self.off],
        }

    @staticmethod
    def from_json(obj) -> "JordanElement":
        diag = [Scalar.from_json(s) for s in obj["diag"]]
        off = [CDNumber.from_json(q) for q in obj["off"]]
        elt = JordanElement(obj["algebra"], diag, off)
        if bool(obj.get("complexified")) != elt.gaussian:
            raise ValueError("complexified flag contradicts coefficient encoding")
        return elt


def _mat_mul(a, b):
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = cd_mul(a[i][0], b[0][j])
            acc = acc + cd_mul(a[i][1], b[1][j])
            acc = acc + cd_mul(a[i][2], b[2][j])
            row.append(acc)
        rows.append(tuple(row))
    return tuple(rows)


def jordan_mul_matrices(x: JordanElement, y: JordanElement) -> JordanElement:
    """x o y = (xy + yx)/2 computed on the underlying hermitian matrices."""
    x._check(y)
    a, b = x.to_matrix(), y.to_matrix()
    ab, ba = _mat_mul(a, b), _mat_mul(b, a)
    half = Scalar(Fraction(1, 2), 0, x.gaussian)
    m = tuple(
        tuple((ab[i][j] + ba[i][j]).scale(half) for j in range(3)) for i in range(3)
    )
    return JordanElement.from_matrix(x.algebra, m)


@lru_cache(maxsize=None)
def _mult_table(algebra: str):
    """Sparse structure constants of the Jordan product in the coordinate
    basis, generated from the hermitian-matrix product on basis pairs (the
    tests cross-check the two routes on random elements)."""
    basis = JordanElement.space_basis(algebra)
    dim = len(basis)
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if j < i:
                row.append(table[j][i])
                continue
            prod = jordan_mul_matrices(basis[i], basis[j]).coords()
            row.append(tuple((k, c.re) for k, c in enumerate(prod) if not c.is_zero()))
        table.append(row)
    return tuple(tuple(r) for r in table)


def jordan_mul(x: JordanElement, y: JordanElement) -> JordanElement:
    """x o y = (xy + yx)/2, through the cached structure constants."""
    x._check(y)
    table = _mult_table(x.algebra)
    gaussian = x.gaussian
    dim = JordanElement.space_dim(x.algebra)
    xc, yc = x.coords(), y.coords()
    zero = Fraction(0)
    out_re = [zero] * dim
    out_im = [zero] * dim
    for i, xi in enumerate(xc):
        if xi.is_zero():
            continue
        row = table[i]
        xr, xi_im = xi.re, xi.im
        for j, yj in enumerate(yc):
            if yj.is_zero():
                continue
            cr = xr * yj.re - xi_im * yj.im
            ci = xr * yj.im + xi_im * yj.re
            for k, c in row[j]:
                out_re[k] += cr * c
                if ci:
                    out_im[k] += ci * c
    coords = [Scalar(r, m, gaussian) for r, m in zip(out_re, out_im)]
    return JordanElement.from_coords(x.algebra, coords, gaussian)


def trace(x: JordanElement) -> Scalar:
    return x.diag[0] + x.diag[1] + x.diag[2]


def trace_form(x: JordanElement, y: JordanElement) -> Scalar:
    """tr(x o y); symmetric, bilinear, positive definite over the rational base."""
    x._check(y)
    acc = x.diag[0] * y.diag[0] + x.diag[1] * y.diag[1] + x.diag[2] * y.diag[2]
    for p, q in zip(x.off, y.off):
        acc = acc + (cd_mul(p, q.conjugate()) + cd_mul(q, p.conjugate())).real()
    return acc


def sigma2(x: JordanElement) -> Scalar:
    t = trace(x)
    return (t * t - trace_form(x, x)) * Scalar(Fraction(1, 2), 0, x.gaussian)


def det(x: JordanElement) -> Scalar:
    a, b, c = x.diag
    p, q, r = x.off  # x = X_23, y = X_13, z = X_12
    cross = cd_mul(cd_mul(r, p), q.conjugate()).real()
    return (
        a * b * c
        - a * p.norm()
        - b * q.norm()
        - c * r.norm()
        + cross
        + cross
    )


def sigma(x: JordanElement) -> Sigma:
    """Coefficients (tr, sigma2, det) of the generic characteristic cubic."""
    return Sigma(trace(x), sigma2(x), det(x))


def sharp(x: JordanElement) -> JordanElement:
    """Adjugate: x o x - tr(x) x + sigma2(x) I; satisfies x o sharp(x) = det(x) I."""
    sq = jordan_mul(x, x)
    ident = JordanElement.identity(x.algebra, x.gaussian)
    return sq - x.scale(trace(x)) + ident.scale(sigma2(x))


def jordan_rank(x: JordanElement) -> int:
    if x.is_zero():
        return 0
    if sharp(x).is_zero():
        return 1
    if det(x).is_zero():
        return 2
    return 3


def quadratic_rep(a: JordanElement, x: JordanElement) -> JordanElement:
    """U_a(x) = 2 a o (a o x) - (a o a) o x; rank preserving for det(a) != 0."""
    axa = jordan_mul(a, jordan_mul(a, x))
    return axa + axa - jordan_mul(jordan_mul(a, a), x)


# -- matrix models -------------------------------------------------------------


def to_symmetric_matrix(x: JordanElement):
    """Algebra R: the element as a plain symmetric 3x3 scalar matrix."""
    if x.algebra != "R":
        raise ValueError("symmetric model needs algebra R")
    m = x.to_matrix()
    return tuple(tuple(m[i][j].real() for j in range(3)) for i in range(3))


def _cd1_to_scalar(q: CDNumber) -> Scalar:
    a, b = q.coeffs
    return Scalar(a.re - b.im, a.im + b.re, gaussian=True)


def _scalar_to_cd1(s: Scalar, gaussian: bool) -> CDNumber:
    if gaussian:
        return CDNumber(1, (Scalar(s.re, 0, True), Scalar(s.im, 0, True)))
    return CDNumber(1, (Scalar(s.re), Scalar(s.im)))


def to_general_matrix(x: JordanElement):
    """Algebra C: first component of the (M, M^T) splitting; a 3x3 Q(i) matrix.

    On the complexified algebra this is a linear bijection onto all of M3 and
    a Jordan-algebra isomorphism onto symmetrized matrix multiplication.
    """
    if x.algebra != "C":
        raise ValueError("general-matrix model needs algebra C")
    m = x.to_matrix()
    return tuple(tuple(_cd1_to_scalar(m[i][j]) for j in range(3)) for i in range(3))


def from_general_matrix(m, gaussian=True) -> JordanElement:
    """Inverse of to_general_matrix; accepts any 3x3 Q(i) matrix."""
    half = Scalar(Fraction(1, 2), 0, True)
    ihalf = Scalar(0, Fraction(-1, 2), True)  # 1/(2i)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            a = (m[i][j] + m[j][i]) * half
            b = (m[i][j] - m[j][i]) * ihalf
            row.append(CDNumber(1, (a, b)))
        rows.append(tuple(row))
    if not gaussian:
        for r in rows:
            for q in r:
                if any(c.im for c in q.coeffs):
                    raise ValueError("matrix does not descend to the rational base")
        rows = tuple(
            tuple(CDNumber(1, tuple(Scalar(c.re) for c in q.coeffs)) for q in r)
            for r in rows
        )
    else:
        rows = tuple(tuple(r) for r in rows)
    return JordanElement.from_matrix("C", rows)


_QUAT_BLOCKS = {
    0: ((Scalar(1, 0, True), Scalar(0, 0, True)), (Scalar(0, 0, True), Scalar(1, 0, True))),
    1: ((Scalar(0, 1, True), Scalar(0, 0, True)), (Scalar(0, 0, True), Scalar(0, -1, True))),
    2: ((Scalar(0, 0, True), Scalar(1, 0, True)), (Scalar(-1, 0, True), Scalar(0, 0, True))),
    3: ((Scalar(0, 0, True), Scalar(0, 1, True)), (Scalar(0, 1, True), Scalar(0, 0, True))),
}


def quaternion_to_block(q: CDNumber):
    """2x2 complex block of a (possibly Gaussian-base) quaternion."""
    if q.level != 2:
        raise ValueError("expected a level-2 entry")
    out = [[Scalar.zero(True), Scalar.zero(True)], [Scalar.zero(True), Scalar.zero(True)]]
    for k, c in enumerate(q.coeffs):
        if c.is_zero():
            continue
        cg = c.to_gaussian()
        blk = _QUAT_BLOCKS[k]
        for i in range(2):
            for j in range(2):
                out[i][j] = out[i][j] + cg * blk[i][j]
    return tuple(tuple(r) for r in out)


def block_to_quaternion(b, gaussian: bool) -> CDNumber:
    half = Scalar(Fraction(1, 2), 0, True)
    mihalf = Scalar(0, Fraction(-1, 2), True)
    c0 = (b[0][0] + b[1][1]) * half
    c1 = (b[0][0] - b[1][1]) * mihalf
    c2 = (b[0][1] - b[1][0]) * half
    c3 = (b[0][1] + b[1][0]) * mihalf
    coeffs = (c0, c1, c2, c3)
    if not gaussian:
        if any(c.im for c in coeffs):
            raise ValueError("block does not come from a rational-base quaternion")
        coeffs = tuple(Scalar(c.re) for c in coeffs)
    return CDNumber(2, coeffs)


def _j6():
    z, o = Scalar.zero(True), Scalar.one(True)
    j2 = ((z, o), (-o, z))
    rows = []
    for bi in range(3):
        for r in range(2):
            row = []
            for bj in range(3):
                for c in range(2):
                    row.append(j2[r][c] if bi == bj else z)
            rows.append(tuple(row))
    return tuple(rows)


J6 = _j6()


def to_skew_matrix(x: JordanElement):
    """Algebra H: psi(X) * J6, a skew-symmetric 6x6 matrix over Q(i)."""
    if x.algebra != "H":
        raise ValueError("skew model needs algebra H")
    m = x.to_matrix()
    rows = []
    for i in range(3):
        blocks = [quaternion_to_block(m[i][j]) for j in range(3)]
        for r in range(2):
            row = []
            for j in range(3):
                row.extend(blocks[j][r])
            rows.append(tuple(row))
    return linalg.mul(tuple(rows), J6)


def from_skew_matrix(a, gaussian=True) -> JordanElement:
    """Inverse of to_skew_matrix on skew-symmetric input."""
    for i in range(6):
        for j in range(6):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    psi = linalg.mul(a, linalg.neg(J6))  # J6^-1 = -J6
    m = []
    for i in range(3):
        row = []
        for j in range(3):
            blk = tuple(tuple(psi[2 * i + r][2 * j + c] for c in range(2)) for r in range(2))
            row.append(block_to_quaternion(blk, gaussian))
        m.append(tuple(row))
    return JordanElement.from_matrix("H", tuple(m))


def pfaffian(a) -> Scalar:
    """Pfaffian of an even skew-symmetric Scalar matrix, by row expansion."""
    n = len(a)
    if n % 2:
        raise ValueError("odd-dimensional skew matrix has no pfaffian")
    for i in range(n):
        for j in range(n):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not skew-symmetric")
    return _pf(a)


def _pf(a) -> Scalar:
    n = len(a)
    if n == 0:
        return Scalar.one(True)
    gaussian = a[0][0].gaussian
    if n == 2:
        return a[0][1]
    acc = Scalar.zero(gaussian)
    for j in range(1, n):
        if a[0][j].is_zero():
            continue
        keep = [r for r in range(1, n) if r != j]
        minor = tuple(tuple(a[r][c] for c in keep) for r in keep)
        term = a[0][j] * _pf(minor)
        acc = acc + term if j % 2 == 1 else acc - term
    return acc


def matrix_model_rank(x: JordanElement) -> int:
    """Ordinary matrix rank in the classical model (halved for algebra H)."""
    if x.algebra == "R":
        return linalg.rank(to_symmetric_matrix(x))
    if x.algebra == "C":
        return linalg.rank(to_general_matrix(x))
    if x.algebra == "H":
        r = linalg.rank(to_skew_matrix(x))
        if r % 2:
            raise ArithmeticError("skew model rank must be even")
        return r // 2
    raise ValueError("no classical matrix model for the octonionic algebra")
