"""Rank stratification of the complexified Jordan algebras and the closed
rank-one orbit: projective points, the three classical homogeneous embeddings,
chords of the rank-one locus, and the gradient of the cubic norm.

Everything is projective-exact: proportionality over Q(i) is decided by
cross-multiplication, and all rank and gradient statements are zero tests in
exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cayley_dickson import CDNumber
from .jordan import (
    JordanElement,
    det,
    from_general_matrix,
    from_skew_matrix,
    jordan_mul,
    jordan_rank,
    quadratic_rep,
    sharp,
    trace,
    trace_form,
)
from .scalars import Scalar


class ProjPoint:
    """A point of P(J_C): a nonzero complexified element up to scale."""

    __slots__ = ("rep",)

    def __init__(self, rep: JordanElement):
        if not rep.gaussian:
            raise ValueError("projective points live on the complexified algebra")
        if rep.is_zero():
            raise ValueError("zero vector does not define a projective point")
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.rep, other.rep
        if a.algebra != b.algebra:
            return False
        ca, cb = a.coords(), b.coords()
        pivot = next(i for i, c in enumerate(ca) if not c.is_zero())
        if cb[pivot].is_zero():
            return False
        lam_a, lam_b = cb[pivot], ca[pivot]
        return all(lam_a * x == lam_b * y for x, y in zip(ca, cb))

    def __hash__(self):
        # scale-normalize on the first nonzero coordinate
        coords = self.rep.coords()
        pivot = next(c for c in coords if not c.is_zero())
        inv = pivot.inverse()
        return hash((self.rep.algebra, tuple(inv * c for c in coords)))

    def __repr__(self):
        return f"ProjPoint({self.rep!r})"

    def stratum(self) -> int:
        return jordan_rank(self.rep)

    def to_json(self):
        obj = self.rep.to_json()
        obj["projective"] = True
        return obj

    @staticmethod
    def from_json(obj) -> "ProjPoint":
        return ProjPoint(JordanElement.from_json(obj))


def stratify(x: JordanElement) -> int:
    """Jordan rank; constant on punctured lines through the origin."""
    return jordan_rank(x)


def _vec3(v):
    out = []
    for c in v:
        if isinstance(c, Scalar):
            out.append(c.to_gaussian())
        else:
            out.append(Scalar(Fraction(c), 0, True))
    return tuple(out)


def veronese(v) -> JordanElement:
    """v -> v v^T, a rank-one symmetric matrix (algebra R, complexified)."""
    v = _vec3(v)
    if all(c.is_zero() for c in v):
        raise ValueError("zero vector")
    diag = tuple(v[i] * v[i] for i in range(3))
    lift = lambda s: CDNumber(0, (s,))
    off = (lift(v[1] * v[2]), lift(v[0] * v[2]), lift(v[0] * v[1]))
    return JordanElement("R", diag, off)


def segre(u, w) -> JordanElement:
    """(u, w) -> u w^T in the full-matrix model (algebra C, complexified)."""
    u, w = _vec3(u), _vec3(w)
    if all(c.is_zero() for c in u) or all(c.is_zero() for c in w):
        raise ValueError("zero vector")
    m = tuple(tuple(u[i] * w[j] for j in range(3)) for i in range(3))
    return from_general_matrix(m)


def plucker(u, w) -> JordanElement:
    """(u, w) -> u ^ w in the skew model (algebra H, complexified).

    Inputs are 6-vectors; they must be linearly independent.
    """
    u = tuple(_vec6_entry(c) for c in u)
    w = tuple(_vec6_entry(c) for c in w)
    if len(u) != 6 or len(w) != 6:
        raise ValueError("plucker needs two 6-vectors")
    skew = tuple(
        tuple(u[i] * w[j] - u[j] * w[i] for j in range(6)) for i in range(6)
    )
    if all(x.is_zero() for row in skew for x in row):
        raise ValueError("vectors are linearly dependent")
    return from_skew_matrix(skew)


def _vec6_entry(c):
    if isinstance(c, Scalar):
        return c.to_gaussian()
    return Scalar(Fraction(c), 0, True)


def rank1_sample(algebra: str, rng) -> JordanElement:
    """A random rank-one element, as U_A(E11) for random invertible A."""
    e11 = JordanElement.diagonal(algebra, 1, 0, 0, gaussian=True)
    while True:
        a = random_element(algebra, rng, gaussian=True)
        if not det(a).is_zero():
            out = quadratic_rep(a, e11)
            if not out.is_zero():
                return out


def random_element(algebra: str, rng, gaussian=False, span=2) -> JordanElement:
    dim = JordanElement.space_dim(algebra)
    coords = []
    for _ in range(dim):
        re = Fraction(rng.randint(-span, span), rng.choice([1, 2]))
        if gaussian:
            im = Fraction(rng.randint(-span, span), rng.choice([1, 2]))
            coords.append(Scalar(re, im, gaussian=True))
        else:
            coords.append(Scalar(re))
    return JordanElement.from_coords(algebra, coords, gaussian)


def rank_k_sample(algebra: str, k: int, rng, gaussian=True) -> JordanElement:
    """A random element of Jordan rank exactly k (0 <= k <= 3)."""
    if k == 0:
        return JordanElement.zero(algebra, gaussian)
    seed = JordanElement.diagonal(algebra, 1, 1 if k > 1 else 0, 1 if k > 2 else 0, gaussian)
    while True:
        a = random_element(algebra, rng, gaussian)
        if det(a).is_zero():
            continue
        out = quadratic_rep(a, seed)
        if jordan_rank(out) == k:
            return out


def chord(p: ProjPoint, q: ProjPoint, lam: Scalar, mu: Scalar) -> ProjPoint:
    """lam p + mu q for rank-one p, q; lands in the cubic (rank <= 2)."""
    if p.stratum() != 1 or q.stratum() != 1:
        raise ValueError("chord endpoints must have Jordan rank one")
    if lam.is_zero() and mu.is_zero():
        raise ValueError("(0, 0) does not give a chord point")
    rep = p.rep.scale(lam.to_gaussian()) + q.rep.scale(mu.to_gaussian())
    if rep.is_zero():
        raise ValueError("chord coefficients annihilate the pair")
    return ProjPoint(rep)


def cubic_gradient(x: JordanElement) -> JordanElement:
    """Trace-form gradient of det; coincides with the adjugate sharp(x).

    Vanishes exactly on the rank <= 1 locus, which is the algebraic singular
    locus of the cubic hypersurface.
    """
    return sharp(x)


def det_curve_coefficients(x: JordanElement, h: JordanElement):
    """Exact coefficients (c0, c1, c2, c3) of t -> det(x + t h).

    Computed by evaluation at t = 0, 1, -1, 2 and solving the Vandermonde
    system; this is the independent oracle for the gradient identity
    c1 = trace_form(sharp(x), h).
    """
    g = x.gaussian
    ts = (0, 1, -1, 2)
    vals = []
    for t in ts:
        vals.append(det(x + h.scale(Scalar(Fraction(t), 0, g))))
    v = tuple(
        tuple(Scalar(Fraction(t**k), 0, g) for k in range(4)) for t in ts
    )
    sol = linalg.solve(v, tuple(vals))
    if sol is None:
        raise ArithmeticError("Vandermonde solve failed")
    return sol


def closed_orbit_tangent_dim(algebra: str) -> int:
    """dim of the affine cone over the closed orbit, from the tangent space
    of {sharp = 0} at E11 (exact kernel of the linearized adjugate)."""
    e11 = JordanElement.diagonal(algebra, 1, 0, 0, gaussian=True)
    basis = JordanElement.space_basis(algebra, gaussian=True)
    cols = []
    for h in basis:
        cols.append(_sharp_derivative(e11, h).coords())
    m = tuple(zip(*cols))  # rows indexed by output coordinate
    return len(basis) - linalg.rank(m)


def _sharp_derivative(x: JordanElement, h: JordanElement) -> JordanElement:
    xh = jordan_mul(x, h)
    tx, th = trace(x), trace(h)
    ident = JordanElement.identity(x.algebra, x.gaussian)
    ds2 = tx * th - trace_form(x, h)
    return xh + xh - x.scale(th) - h.scale(tx) + ident.scale(ds2)


def closure_chain_audit(rng, samples=20):
    """Desk-scale audit of the ambient/orbit dimension bookkeeping and of the
    rank behaviour along degenerating curves.

    Returns a dict with the projective ambient dimensions m, the closed-orbit
    dimensions n, the critical relation check, and a degeneration record.
    """
    report = {}
    ms, ns = [], []
    for algebra in ("R", "C", "H", "O"):
        dim_p = JordanElement.space_dim(algebra)
        m = dim_p - 1
        n = closed_orbit_tangent_dim(algebra) - 1
        ms.append(m)
        ns.append(n)
    report["m"] = ms
    report["n"] = ns
    report["critical_relation"] = [
        Fraction(3, 2) * n + 2 == m for m, n in zip(ms, ns)
    ]

    drops = []
    never_exceeds = True
    for algebra in ("R", "C", "H", "O"):
        for _ in range(samples):
            s = rng.choice([1, 2, 3])
            x = rank_k_sample(algebra, s, rng)
            seen_drop = False
            for tnum in (0, 1, -1, 2, -2, 3):
                t = Scalar(Fraction(tnum), 0, True)
                r = jordan_rank(x.scale(t))
                if r > s:
                    never_exceeds = False
                if r < s:
                    seen_drop = True
            drops.append(seen_drop)
        # curves U_{A + t B}(seed) stay inside the rank-<= s locus and can
        # only drop where A + t B degenerates
        for _ in range(max(1, samples // 2)):
            s = rng.choice([1, 2, 3])
            seed = JordanElement.diagonal(
                algebra, 1, 1 if s > 1 else 0, 1 if s > 2 else 0, gaussian=True
            )
            a = random_element(algebra, rng, gaussian=True)
            b = random_element(algebra, rng, gaussian=True)
            seen_drop = False
            for tnum in (0, 1, -1, 2, -2):
                t = Scalar(Fraction(tnum), 0, True)
                x_t = quadratic_rep(a + b.scale(t), seed)
                r = jordan_rank(x_t)
                if r > s:
                    never_exceeds = False
                if r < s:
                    seen_drop = True
            drops.append(seen_drop)
    report["rank_never_exceeds"] = never_exceeds
    report["rank_drop_witnessed"] = any(drops)
    return report


def rank1_factor_symmetric(x: JordanElement):
    """Recover v with x = v v^T for a rank-one complexified symmetric element.

    Returns None when the element is not in the image of the Veronese map
    over Q(i) (the pivot must be a Gaussian square).
    """
    if x.algebra != "R":
        raise ValueError("factorization oracle is for the symmetric model")
    from .jordan import to_symmetric_matrix

    m = to_symmetric_matrix(x.complexify() if not x.gaussian else x)
    for i in range(3):
        if not m[i][i].is_zero():
            root = m[i][i].sqrt()
            if root is None:
                return None
            inv = root.inverse()
            v = tuple(m[i][j] * inv for j in range(3))
            ok = all(
                m[r][c] == v[r] * v[c] for r in range(3) for c in range(3)
            )
            return v if ok else None
    return None


def rank1_projective_factor(x: JordanElement):
    """Witness that [x] lies on the closed orbit, as embedding input vectors.

    Works projectively, so no square classes obstruct it: returns
    ("veronese", v) / ("segre", (u, w)) / ("plucker", (u, w)) with the
    embedded point proportional to x.  Raises for the octonionic algebra and
    returns None when x is not rank one.
    """
    if jordan_rank(x) != 1:
        return None
    if x.algebra == "R":
        from .jordan import to_symmetric_matrix

        m = to_symmetric_matrix(x)
        piv = next(i for i in range(3) if not m[i][i].is_zero())
        v = tuple(m[piv])
        if ProjPoint(veronese(v)) != ProjPoint(x):
            return None
        return "veronese", v
    if x.algebra == "C":
        from .jordan import to_general_matrix

        m = to_general_matrix(x)
        pi, pj = next(
            (i, j) for i in range(3) for j in range(3) if not m[i][j].is_zero()
        )
        u = tuple(m[i][pj] for i in range(3))
        w = tuple(m[pi][j] * m[pi][pj].inverse() for j in range(3))
        if ProjPoint(segre(u, w)) != ProjPoint(x):
            return None
        return "segre", (u, w)
    if x.algebra == "H":
        from .jordan import to_skew_matrix

        n = to_skew_matrix(x)
        cols = [c for c in zip(*n) if any(not e.is_zero() for e in c)]
        u = cols[0]
        w = next(c for c in cols[1:] if linalg.rank((u, c)) == 2)
        if ProjPoint(plucker(u, w)) != ProjPoint(x):
            return None
        return "plucker", (u, w)
    raise ValueError("no classical factorization for the octonionic algebra")
