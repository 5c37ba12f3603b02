"""Dual-pair momentum maps on W = Hom(K^s, K^6) for K = R, C, H.

The three cases live on V = K^6 with the skew(-hermitian) form given by the
block matrix B = [[0, I3], [-I3, 0]]; the compact side H acts on K^s through
its standard positive hermitian form, the noncompact side G = U(V, B) is
Sp(3,R), U(3,3) or O*(12).  Writing a map as stacked 3 x s blocks
alpha = [xi; upsilon],

    dagger(alpha)   = [ conj(upsilon)^T  |  -conj(xi)^T ]
    mu_H(alpha)     = -dagger(alpha) alpha
    mu_G(alpha)     =  alpha dagger(alpha)

and both momentum maps satisfy the hamiltonian identity exactly for the
half-trace pairing <A, B> = Re tr(AB) / 2, which is how the normalization of
the symplectic form omega_W(a, b) = sum_t Re B(a e_t, b e_t) is pinned.

The zero level mu_H = 0 reduces onto the rank <= s part of the complexified
Jordan algebra: with C = xi + i upsilon (Gaussian base),

    2i Z = C conj(C)^T,     Z = reduced_point(alpha),

where conj is the Cayley-Dickson conjugation only (the complexification unit
i is untouched), and mu_H = 0 becomes the Gram balance/reality conditions of
the factorization.  hilbert_lift inverts this factorization over Q(i); exact
rational lifts only exist on square-class-compatible loci, so the lift
reports failure outside them and the samplers below generate inside them.
"""

from __future__ import annotations

from fractions import Fraction

from . import cdmatrix as cdm
from . import linalg
from .cayley_dickson import CDNumber
from .jordan import JordanElement, jordan_rank
from .scalars import Scalar

CASE_LEVEL = {"real": 0, "complex": 1, "quaternionic": 2}
CASE_ALGEBRA = {"real": "R", "complex": "C", "quaternionic": "H"}
CASE_RANK = 3
N_V = 6


class LiftError(ValueError):
    """No exact rational lift was found (square-class obstruction or input
    outside the documented constructive families)."""


def bmatrix(case, gaussian=False):
    level = CASE_LEVEL[case]
    z, o = CDNumber.zero(level, gaussian), CDNumber.one(level, gaussian)
    rows = []
    for i in range(3):
        rows.append(tuple(z if j != i + 3 else o for j in range(6)))
    for i in range(3):
        rows.append(tuple(z if j != i else -o for j in range(6)))
    return tuple(rows)


class WMap:
    """A K-linear map K^s -> K^6, stored as a 6 x s matrix over K."""

    __slots__ = ("case", "s", "matrix")

    def __init__(self, case, matrix):
        if case not in CASE_LEVEL:
            raise ValueError(f"unknown case {case!r}")
        matrix = cdm.from_rows(matrix)
        level = CASE_LEVEL[case]
        if len(matrix) != N_V:
            raise ValueError("matrix must have 6 rows")
        for row in matrix:
            for q in row:
                if q.level != level or q.gaussian:
                    raise ValueError("entry level/ring does not match the case")
        object.__setattr__(self, "case", case)
        object.__setattr__(self, "s", len(matrix[0]))
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("WMap is immutable")

    @staticmethod
    def zero(case, s):
        return WMap(case, cdm.zero(N_V, s, CASE_LEVEL[case]))

    def __eq__(self, other):
        if not isinstance(other, WMap):
            return NotImplemented
        return self.case == other.case and self.matrix == other.matrix

    def __repr__(self):
        return f"WMap({self.case}, s={self.s})"

    def blocks(self):
        return self.matrix[:3], self.matrix[3:]

    def to_json(self):
        return {
            "case": self.case,
            "s": self.s,
            "matrix": [[q.to_json() for q in row] for row in self.matrix],
        }

    @staticmethod
    def from_json(obj):
        matrix = [[CDNumber.from_json(q) for q in row] for row in obj["matrix"]]
        w = WMap(obj["case"], matrix)
        if w.s != obj["s"]:
            raise ValueError("column count disagrees with the encoding")
        return w


def dagger(alpha: WMap):
    """The B-adjoint: the unique beta with (beta u, v) = B(u, alpha v)."""
    xi, up = alpha.blocks()
    left = cdm.conj_transpose(up)
    right = cdm.neg(cdm.conj_transpose(xi))
    return tuple(lr + rr for lr, rr in zip(left, right))


def mu_h(alpha: WMap):
    return cdm.neg(cdm.mul(dagger(alpha), alpha.matrix))


def mu_g(alpha: WMap):
    return cdm.mul(alpha.matrix, dagger(alpha))


def b_form(case, u, v):
    """B(u, v) for 6-vectors over K; K-valued."""
    level = CASE_LEVEL[case]
    g = u[0].gaussian
    acc = CDNumber.zero(level, g)
    from .cayley_dickson import cd_mul

    for r in range(3):
        acc = acc + cd_mul(u[r].conjugate(), v[r + 3])
        acc = acc - cd_mul(u[r + 3].conjugate(), v[r])
    return acc


def symplectic_form(alpha: WMap, beta: WMap) -> Scalar:
    """omega_W(alpha, beta) = sum_t Re B(alpha e_t, beta e_t)."""
    if alpha.case != beta.case or alpha.s != beta.s:
        raise ValueError("case or size mismatch")
    b = bmatrix(alpha.case)
    m = cdm.mul(cdm.mul(cdm.conj_transpose(alpha.matrix), b), beta.matrix)
    return cdm.trace_real(m)


def half_trace_pairing(a, b) -> Scalar:
    """<A, B> = Re tr(A B) / 2, the pairing identifying h and g with duals."""
    return cdm.trace_real(cdm.mul(a, b)).__mul__(Scalar(Fraction(1, 2)))


def h_infinitesimal(alpha: WMap, xi) -> WMap:
    """Vector field of the H-action alpha -> alpha x^-1, at xi in Lie(H)."""
    return WMap(alpha.case, cdm.neg(cdm.mul(alpha.matrix, xi)))


def g_infinitesimal(alpha: WMap, eta) -> WMap:
    """Vector field of the G-action alpha -> y alpha, at eta in Lie(G)."""
    return WMap(alpha.case, cdm.mul(eta, alpha.matrix))


def moment_identity_residual_h(alpha: WMap, xi, delta: WMap) -> Scalar:
    """d<mu_H, xi> at alpha in direction delta, minus omega(xi . alpha, delta)."""
    d_mu = cdm.neg(
        cdm.add(
            cdm.mul(dagger(alpha), delta.matrix), cdm.mul(dagger(delta), alpha.matrix)
        )
    )
    lhs = half_trace_pairing(d_mu, xi)
    rhs = symplectic_form(h_infinitesimal(alpha, xi), delta)
    return lhs - rhs


def moment_identity_residual_g(alpha: WMap, eta, delta: WMap) -> Scalar:
    d_mu = cdm.add(
        cdm.mul(alpha.matrix, dagger(delta)), cdm.mul(delta.matrix, dagger(alpha))
    )
    lhs = half_trace_pairing(d_mu, eta)
    rhs = symplectic_form(g_infinitesimal(alpha, eta), delta)
    return lhs - rhs


def moment_identity_check(alpha: WMap, generator, delta: WMap, side="h") -> Scalar:
    """Residual of the hamiltonian identity for either momentum map.

    Exactly zero for every generator and direction: the maps are quadratic,
    so the derivative below is an exact bilinear expression.
    """
    if side == "h":
        return moment_identity_residual_h(alpha, generator, delta)
    if side == "g":
        return moment_identity_residual_g(alpha, generator, delta)
    raise ValueError("side must be 'h' or 'g'")


def in_lie_h(case, xi) -> bool:
    """Anti-hermitian for the standard positive form on K^s."""
    return cdm.is_zero(cdm.add(xi, cdm.conj_transpose(xi)))


def in_lie_g(case, m) -> bool:
    """conj(M)^T B + B M = 0 for the case form B."""
    b = bmatrix(case)
    lhs = cdm.add(cdm.mul(cdm.conj_transpose(m), b), cdm.mul(b, m))
    return cdm.is_zero(lhs)


# -- group generators (exact rational points, used for equivariance tests) ------


def h_group_generators(case, s, rng, count=2):
    """Random words in exact generators of H = O(s) / U(s) / Sp(s)."""
    level = CASE_LEVEL[case]
    out = []
    for _ in range(count):
        g = cdm.identity(s, level)
        for _ in range(3):
            g = cdm.mul(g, _h_generator(case, s, rng))
        out.append(g)
    return out


def _h_generator(case, s, rng):
    level = CASE_LEVEL[case]
    kind = rng.choice(["perm", "unit", "rot"] if s > 1 else ["unit"])
    ident = [list(row) for row in cdm.identity(s, level)]
    if kind == "perm":
        i, j = rng.sample(range(s), 2)
        ident[i], ident[j] = ident[j], ident[i]
        return cdm.from_rows(ident)
    if kind == "unit":
        i = rng.randrange(s)
        k = rng.randrange(1 << level)
        sign = rng.choice([1, -1])
        u = CDNumber.unit(level, k)
        ident[i][i] = u if sign > 0 else -u
        return cdm.from_rows(ident)
    i, j = rng.sample(range(s), 2)
    c, d = Scalar(Fraction(3, 5)), Scalar(Fraction(4, 5))
    ident[i][i] = CDNumber.from_scalar(level, c)
    ident[j][j] = CDNumber.from_scalar(level, c)
    ident[i][j] = CDNumber.from_scalar(level, -d)
    ident[j][i] = CDNumber.from_scalar(level, d)
    return cdm.from_rows(ident)


def g_group_generators(case, rng, count=2):
    """Random words in exact generators of G = U(V, B)."""
    out = []
    for _ in range(count):
        g = _g_shear(case, rng, upper=True)
        g = cdm.mul(g, _g_block_diag(case, rng))
        g = cdm.mul(g, _g_shear(case, rng, upper=False))
        out.append(g)
    return out


def _random_hermitian3(case, rng, span=2):
    level = CASE_LEVEL[case]
    rows = [[CDNumber.zero(level) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        rows[i][i] = CDNumber.from_scalar(level, Scalar(Fraction(rng.randint(-span, span))))
    for i in range(3):
        for j in range(i + 1, 3):
            q = CDNumber(
                level,
                [Scalar(Fraction(rng.randint(-span, span), rng.choice([1, 2])))
                 for _ in range(1 << level)],
            )
            rows[i][j] = q
            rows[j][i] = q.conjugate()
    return cdm.from_rows(rows)


def _g_shear(case, rng, upper=True):
    level = CASE_LEVEL[case]
    x = _random_hermitian3(case, rng, span=1)
    ident = cdm.identity(3, level)
    zero = cdm.zero(3, 3, level)
    if upper:
        top = tuple(ri + xi for ri, xi in zip(ident, x))
        bot = tuple(zi + ri for zi, ri in zip(zero, ident))
    else:
        top = tuple(ri + zi for ri, zi in zip(ident, zero))
        bot = tuple(xi + ri for xi, ri in zip(x, ident))
    return top + bot


def _g_block_diag(case, rng):
    level = CASE_LEVEL[case]
    while True:
        g = [
            [
                CDNumber(
                    level,
                    [Scalar(Fraction(rng.randint(-2, 2), rng.choice([1, 2])))
                     for _ in range(1 << level)],
                )
                for _ in range(3)
            ]
            for _ in range(3)
        ]
        g = cdm.from_rows(g)
        try:
            hinv = cdm.inverse(cdm.conj_transpose(g))
        except ZeroDivisionError:
            continue
        zero = cdm.zero(3, 3, level)
        top = tuple(gi + zi for gi, zi in zip(g, zero))
        bot = tuple(zi + hi for zi, hi in zip(zero, hinv))
        return top + bot


def act_h(alpha: WMap, x) -> WMap:
    """alpha -> alpha x^-1."""
    return WMap(alpha.case, cdm.mul(alpha.matrix, cdm.inverse(x)))


def act_g(alpha: WMap, y) -> WMap:
    """alpha -> y alpha."""
    return WMap(alpha.case, cdm.mul(y, alpha.matrix))


# -- reduction to the complexified Jordan algebra -------------------------------


def p_projection_blocks(alpha: WMap):
    """(w, x_p): hermitian 3x3 K-matrices of the p-part of mu_G(alpha)."""
    m = mu_g(alpha)
    a = tuple(row[:3] for row in m[:3])
    x = tuple(row[3:] for row in m[:3])
    y = tuple(row[:3] for row in m[3:])
    half = Scalar(Fraction(1, 2))
    w = cdm.scale(cdm.add(a, cdm.conj_transpose(a)), half)
    xp = cdm.scale(cdm.add(x, y), half)
    return w, xp


def reduced_point(alpha: WMap) -> JordanElement:
    """Project mu_G(alpha) to p and read it as a complexified Jordan element.

    The identification sends the p-part with blocks (w, x_p) to w + i x_p.
    Requires mu_H(alpha) = 0 exactly.
    """
    if not cdm.is_zero(mu_h(alpha)):
        raise ValueError("alpha is not in the zero level of mu_H")
    w, xp = p_projection_blocks(alpha)
    algebra = CASE_ALGEBRA[alpha.case]
    w_elt = JordanElement.from_matrix(algebra, w)
    xp_elt = JordanElement.from_matrix(algebra, xp)
    return JordanElement.combine_real_imag(w_elt, xp_elt)


def stratum(alpha: WMap) -> int:
    return jordan_rank(reduced_point(alpha))


# -- zero-level samplers ----------------------------------------------------------


def _random_cd(level, rng, span=2):
    return CDNumber(
        level,
        [Scalar(Fraction(rng.randint(-span, span), rng.choice([1, 2])))
         for _ in range(1 << level)],
    )


def zero_level_sample(case, s, target_rank, rng, enrich=True) -> WMap:
    """alpha with mu_H(alpha) = 0 and reduced stratum exactly target_rank.

    Construction: xi carries k = target_rank nonzero columns, upsilon is
    xi (xi* xi)^-1 S on those columns with S hermitian, which forces the
    momentum balance; the trivial upsilon = 0 family is mixed in.  Optionally
    the sample is moved by exact G and H group elements, which preserves both
    the zero level and the stratum.
    """
    k = target_rank
    if not 0 <= k <= min(s, CASE_RANK):
        raise ValueError("target rank must be between 0 and min(s, 3)")
    level = CASE_LEVEL[case]
    if k == 0:
        return WMap.zero(case, s)
    for _ in range(200):
        xi1 = tuple(tuple(_random_cd(level, rng) for _ in range(k)) for _ in range(3))
        n = cdm.mul(cdm.conj_transpose(xi1), xi1)
        try:
            ninv = cdm.inverse(n)
        except ZeroDivisionError:
            continue
        if rng.random() < 0.3:
            up1 = cdm.zero(3, k, level)
        else:
            s_herm = _random_hermitian_k(level, k, rng)
            up1 = cdm.mul(xi1, cdm.mul(ninv, s_herm))
        pad = cdm.zero(3, s - k, level)
        xi = tuple(r1 + r2 for r1, r2 in zip(xi1, pad))
        up = tuple(r1 + r2 for r1, r2 in zip(up1, pad))
        alpha = WMap(case, xi + up)
        if not cdm.is_zero(mu_h(alpha)):
            raise AssertionError("sampler violated the zero level")
        if enrich:
            alpha = act_g(alpha, g_group_generators(case, rng, count=1)[0])
            alpha = act_h(alpha, h_group_generators(case, s, rng, count=1)[0])
        if stratum(alpha) == k:
            return alpha
    raise RuntimeError("zero-level sampler did not reach the target rank")


def _random_hermitian_k(level, k, rng):
    rows = [[CDNumber.zero(level) for _ in range(k)] for _ in range(k)]
    for i in range(k):
        rows[i][i] = CDNumber.from_scalar(level, Scalar(Fraction(rng.randint(-2, 2))))
    for i in range(k):
        for j in range(i + 1, k):
            q = _random_cd(level, rng)
            rows[i][j] = q
            rows[j][i] = q.conjugate()
    return cdm.from_rows(rows)


def dims_projective_chain(case):
    """Complex dimensions of P[W(1)] in P[W(2)] in P[W(3)]."""
    real_dim_per_s = {"real": 6, "complex": 12, "quaternionic": 24}[case]
    return tuple(real_dim_per_s * s // 2 - 1 for s in (1, 2, 3))


# -- oscillator picture of the real case ------------------------------------------


class OscillatorConfig:
    """Positions and momenta of 3 particles in R^s, exact rationals.

    Encodes a real-case WMap: position coordinates fill the top block, the
    momenta the bottom block, so the a-th column of the map collects the a-th
    coordinate of every particle.
    """

    __slots__ = ("q", "p")

    def __init__(self, q, p):
        q = tuple(tuple(Fraction(x) for x in row) for row in q)
        p = tuple(tuple(Fraction(x) for x in row) for row in p)
        if len(q) != 3 or len(p) != 3:
            raise ValueError("expected 3 particles")
        widths = {len(r) for r in q} | {len(r) for r in p}
        if len(widths) != 1:
            raise ValueError("positions and momenta must share a dimension")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("OscillatorConfig is immutable")

    @property
    def s(self):
        return len(self.q[0])

    def to_json(self):
        return {
            "q": [[[x.numerator, x.denominator] for x in row] for row in self.q],
            "p": [[[x.numerator, x.denominator] for x in row] for row in self.p],
        }

    @staticmethod
    def from_json(obj):
        q = [[Fraction(n, d) for n, d in row] for row in obj["q"]]
        p = [[Fraction(n, d) for n, d in row] for row in obj["p"]]
        return OscillatorConfig(q, p)


def encode_oscillator(c: OscillatorConfig) -> WMap:
    rows = []
    for i in range(3):
        rows.append(tuple(CDNumber(0, (Scalar(x),)) for x in c.q[i]))
    for i in range(3):
        rows.append(tuple(CDNumber(0, (Scalar(x),)) for x in c.p[i]))
    return WMap("real", rows)


def angular_momentum(c: OscillatorConfig):
    """J_ab = sum_i (q_i^a p_i^b - q_i^b p_i^a), a skew s x s matrix."""
    s = c.s
    out = []
    for a in range(s):
        row = []
        for b in range(s):
            acc = Fraction(0)
            for i in range(3):
                acc += c.q[i][a] * c.p[i][b] - c.q[i][b] * c.p[i][a]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def classify_config(c: OscillatorConfig) -> int:
    """dim span{q_i, p_i} in R^s, clamped to the rank bound 3.

    For zero angular momentum this equals the Jordan-rank stratum of the
    reduced point of the encoded map.
    """
    rows = [tuple(Scalar(x) for x in r) for r in c.q]
    rows += [tuple(Scalar(x) for x in r) for r in c.p]
    return min(linalg.rank(tuple(rows)), CASE_RANK)


def oscillator_sample(s, target_rank, rng) -> OscillatorConfig:
    """A zero-angular-momentum configuration with the given stratum."""
    alpha = zero_level_sample("real", s, target_rank, rng)
    q = tuple(tuple(x.coeffs[0].re for x in row) for row in alpha.matrix[:3])
    p = tuple(tuple(x.coeffs[0].re for x in row) for row in alpha.matrix[3:])
    return OscillatorConfig(q, p)
