"""Named verification campaigns over the whole library.

Each suite returns a list of check records

    {"name": ..., "case": ..., "samples": n, "failures": k, "witness": ...}

computed deterministically from a seed.  The command-line front end only
formats these records; all mathematics happens in the library modules.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import cdmatrix as cdm
from . import linalg
from .cayley_dickson import CDNumber, basis as cd_basis, cd_associator, cd_mul, cd_mul_doubling
from .jordan import (
    ALGEBRAS,
    JordanElement,
    det,
    jordan_mul,
    jordan_rank,
    matrix_model_rank,
    quadratic_rep,
    sharp,
    sigma2,
    trace,
    trace_form,
)
from .lifts import hilbert_lift, liftable_sample
from .poisson import (
    PolyFn,
    case_poisson,
    embed_reduced_point,
    poisson_rank_at,
    poisson_rank_at_matrix,
)
from .reduction import (
    CASE_LEVEL,
    OscillatorConfig,
    WMap,
    act_h,
    angular_momentum,
    b_form,
    classify_config,
    dagger,
    dims_projective_chain,
    encode_oscillator,
    g_group_generators,
    g_infinitesimal,
    h_group_generators,
    h_infinitesimal,
    in_lie_g,
    in_lie_h,
    moment_identity_residual_g,
    moment_identity_residual_h,
    mu_g,
    mu_h,
    oscillator_sample,
    reduced_point,
    stratum,
    symplectic_form,
    zero_level_sample,
)
from .scalars import Scalar
from .strata import (
    ProjPoint,
    chord,
    closed_orbit_tangent_dim,
    closure_chain_audit,
    cubic_gradient,
    det_curve_coefficients,
    rank1_sample,
    rank_k_sample,
    random_element,
)
from .tkk import CASES as TKK_CASES, TKKElement, jcoords, tkk_algebra

CLASSICAL_CASES = ("real", "complex", "quaternionic")

SUITES = {}


def register(name):
    def deco(fn):
        SUITES[name] = fn
        return fn

    return deco


def run_suite(name, case=None, samples=25, seed=0):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](case=case, samples=samples, seed=seed)


def _check(name, case, samples, failures, witness=None):
    return {
        "name": name,
        "case": case or "-",
        "samples": samples,
        "failures": failures,
        "witness": witness,
    }


def _count(name, case, iterator):
    failures = 0
    witness = None
    n = 0
    for ok, wit in iterator:
        n += 1
        if not ok:
            failures += 1
            if witness is None:
                witness = wit
    return _check(name, case, n, failures, witness)


def _rand_scalar(rng, gaussian=False, span=3):
    re = Fraction(rng.randint(-span, span), rng.choice([1, 2]))
    if gaussian:
        return Scalar(re, Fraction(rng.randint(-span, span), rng.choice([1, 2])), True)
    return Scalar(re)


def _rand_cd(rng, level, gaussian=False, span=3):
    return CDNumber(level, [_rand_scalar(rng, gaussian, span) for _ in range(1 << level)])


# -- division algebras -------------------------------------------------------------


@register("division-algebra")
def division_algebra_suite(case=None, samples=100, seed=0):
    rng = random.Random(seed)
    checks = []

    def pairs():
        for _ in range(samples):
            a, b = _rand_cd(rng, 3), _rand_cd(rng, 3)
            yield a, b

    checks.append(
        _count(
            "composition-norm",
            "O",
            (((a * b).norm() == a.norm() * b.norm(), repr((a, b))) for a, b in pairs()),
        )
    )
    checks.append(
        _count(
            "doubling-vs-table",
            "O",
            ((cd_mul(a, b) == cd_mul_doubling(a, b), repr((a, b))) for a, b in pairs()),
        )
    )
    checks.append(
        _count(
            "conjugation-antiautomorphism",
            "O",
            (
                ((a * b).conjugate() == b.conjugate() * a.conjugate(), repr((a, b)))
                for a, b in pairs()
            ),
        )
    )

    def alternativity():
        for _ in range(samples):
            a, b = _rand_cd(rng, 3), _rand_cd(rng, 3)
            ok = cd_associator(a, a, b).is_zero() and cd_associator(a, b, b).is_zero()
            yield ok, repr((a, b))

    checks.append(_count("alternativity", "O", alternativity()))

    def unit_law():
        one = CDNumber.one(3)
        for _ in range(samples):
            a = _rand_cd(rng, 3)
            yield (one * a == a and a * one == a), repr(a)

    checks.append(_count("unit-law", "O", unit_law()))

    for level in (0, 1, 2):
        units = cd_basis(level)
        bad = 0
        for a in units:
            for b in units:
                for c in units:
                    if not cd_associator(a, b, c).is_zero():
                        bad += 1
        checks.append(
            _check(f"associative-level-{level}", "-", len(units) ** 3, bad)
        )
    units = cd_basis(3)
    witness = None
    for a in units:
        for b in units:
            for c in units:
                if not cd_associator(a, b, c).is_zero():
                    witness = f"({a!r}, {b!r}, {c!r})"
                    break
            if witness:
                break
        if witness:
            break
    checks.append(
        _check("octonion-nonassociativity-witness", "O", 512, 0 if witness else 1, witness)
    )
    iso = CDNumber(3, [Scalar(1, 0, True), Scalar(0, 1, True)] + [Scalar.zero(True)] * 6)
    checks.append(
        _check(
            "gaussian-norm-isotropy",
            "O_C",
            1,
            0 if (iso.norm().is_zero() and not iso.is_zero()) else 1,
            repr(iso),
        )
    )
    return checks


# -- Jordan identities ---------------------------------------------------------------


def _algebras_for(case):
    if case in (None, "-", "all"):
        return [(a, False) for a in ALGEBRAS] + [("O", True)]
    if case.endswith("_C"):
        return [(case[:-2], True)]
    return [(case, False)]


@register("jordan-identities")
def jordan_suite(case=None, samples=50, seed=0):
    rng = random.Random(seed)
    checks = []
    for algebra, gaussian in _algebras_for(case):
        tag = algebra + ("_C" if gaussian else "")
        ident = JordanElement.identity(algebra, gaussian)

        def elems(count=samples):
            for _ in range(count):
                yield random_element(algebra, rng, gaussian)

        checks.append(
            _count(
                "commutativity",
                tag,
                (
                    (jordan_mul(x, y) == jordan_mul(y, x), repr((x, y)))
                    for x, y in zip(elems(), elems())
                ),
            )
        )

        def jordan_identity():
            for x, y in zip(elems(), elems()):
                x2 = jordan_mul(x, x)
                lhs = jordan_mul(jordan_mul(x2, y), x)
                rhs = jordan_mul(x2, jordan_mul(y, x))
                yield lhs == rhs, repr((x, y))

        checks.append(_count("jordan-identity", tag, jordan_identity()))

        def adjugate():
            for x in elems():
                yield jordan_mul(x, sharp(x)) == ident.scale(det(x)), repr(x)

        checks.append(_count("adjugate-identity", tag, adjugate()))

        def cayley_hamilton():
            for x in elems():
                x2 = jordan_mul(x, x)
                x3 = jordan_mul(x2, x)
                lhs = x3 - x2.scale(trace(x)) + x.scale(sigma2(x)) - ident.scale(det(x))
                yield lhs.is_zero(), repr(x)

        checks.append(_count("cayley-hamilton", tag, cayley_hamilton()))

        def det_multiplicativity():
            for a, x in zip(elems(), elems()):
                lhs = det(quadratic_rep(a, x))
                rhs = det(a) * det(a) * det(x)
                yield lhs == rhs, repr((a, x))

        checks.append(_count("det-quadratic-rep", tag, det_multiplicativity()))

        def rank_invariance():
            for _ in range(samples):
                a = random_element(algebra, rng, gaussian)
                if det(a).is_zero():
                    continue
                x = rank_k_sample(algebra, rng.choice([1, 2, 3]), rng, gaussian)
                yield jordan_rank(quadratic_rep(a, x)) == jordan_rank(x), repr((a, x))

        checks.append(_count("rank-invariance", tag, rank_invariance()))

        if not gaussian:

            def positivity():
                for x in elems():
                    if x.is_zero():
                        continue
                    yield trace_form(x, x).re > 0, repr(x)

            checks.append(_count("trace-form-positivity", tag, positivity()))
    return checks


@register("rank-identification")
def rank_identification_suite(case=None, samples=125, seed=0):
    rng = random.Random(seed)
    algebras = ["R", "C", "H"] if case in (None, "-", "all") else [case]
    checks = []
    for algebra in algebras:
        def ranks():
            for k in (0, 1, 2, 3):
                for _ in range(max(1, samples // 4)):
                    x = rank_k_sample(algebra, k, rng)
                    yield matrix_model_rank(x) == jordan_rank(x) == k, repr(x)

        checks.append(_count("jordan-vs-matrix-rank", algebra, ranks()))
    return checks


@register("singular-locus")
def singular_locus_suite(case=None, samples=25, seed=0):
    rng = random.Random(seed)
    checks = []
    audit = closure_chain_audit(rng, samples=max(2, samples // 10))
    checks.append(
        _check("ambient-dims-m", "-", 4, 0 if audit["m"] == [5, 8, 14, 26] else 1, str(audit["m"]))
    )
    checks.append(
        _check("closed-orbit-dims-n", "-", 4, 0 if audit["n"] == [2, 4, 8, 16] else 1, str(audit["n"]))
    )
    checks.append(
        _check(
            "critical-relation",
            "-",
            4,
            0 if all(audit["critical_relation"]) else 1,
        )
    )
    checks.append(
        _check("degeneration-rank-bound", "-", 1, 0 if audit["rank_never_exceeds"] else 1)
    )
    for algebra in ALGEBRAS:
        def gradient():
            for _ in range(samples):
                x = random_element(algebra, rng, gaussian=True)
                h = random_element(algebra, rng, gaussian=True)
                c = det_curve_coefficients(x, h)
                ok = c[1] == trace_form(sharp(x), h) and c[0] == det(x)
                yield ok, repr((x, h))

        checks.append(_count("gradient-is-adjugate", algebra, gradient()))

        def vanishing():
            for k in (0, 1, 2, 3):
                for _ in range(max(1, samples // 4)):
                    x = rank_k_sample(algebra, k, rng)
                    grad_zero = cubic_gradient(x).is_zero()
                    yield grad_zero == (jordan_rank(x) <= 1), repr(x)

        checks.append(_count("gradient-vanishing-locus", algebra, vanishing()))

        def chords():
            for _ in range(samples):
                p = ProjPoint(rank1_sample(algebra, rng))
                q = ProjPoint(rank1_sample(algebra, rng))
                lam = _rand_scalar(rng, True)
                mu = _rand_scalar(rng, True)
                if lam.is_zero() and mu.is_zero():
                    lam = Scalar.one(True)
                try:
                    c = chord(p, q, lam, mu)
                except ValueError:
                    continue
                yield det(c.rep).is_zero(), repr((p.rep, q.rep))

        checks.append(_count("chords-inside-cubic", algebra, chords()))

        def generic_triple():
            hits = 0
            for _ in range(samples):
                x = rank1_sample(algebra, rng) + rank1_sample(algebra, rng) + rank1_sample(algebra, rng)
                if not det(x).is_zero():
                    hits += 1
            yield hits > 0, "no rank-one triple left the cubic"

        checks.append(_count("cubic-is-proper", algebra, generic_triple()))
    return checks


@register("tkk")
def tkk_suite(case=None, samples=20, seed=0):
    rng = random.Random(seed)
    cases = list(TKK_CASES) if case in (None, "-", "all") else [case]
    checks = []
    expected_dims = {"sp3": (9, 21), "u33": (17, 35), "so12": (36, 66), "e7": (79, 133)}
    for cname in cases:
        alg = tkk_algebra(cname)
        sdim, gdim = expected_dims[cname]
        checks.append(
            _check("str-dimension", cname, 1, 0 if alg.str_dim == sdim else 1, str(alg.str_dim))
        )
        checks.append(
            _check("algebra-dimension", cname, 1, 0 if alg.dim == gdim else 1, str(alg.dim))
        )

        def rand_elt():
            sp = alg.space
            w = random_element(alg.algebra, rng)
            a = random_element(alg.algebra, rng)
            b = random_element(alg.algebra, rng)
            mid = linalg.frac_add(
                sp.lmat(jcoords(w)),
                linalg.frac_commutator(sp.lmat(jcoords(a)), sp.lmat(jcoords(b))),
            )
            return TKKElement(
                cname,
                random_element(alg.algebra, rng),
                mid,
                random_element(alg.algebra, rng),
            )

        def jacobi():
            for _ in range(samples):
                a, b, c = rand_elt(), rand_elt(), rand_elt()
                j = (
                    alg.bracket(alg.bracket(a, b), c)
                    + alg.bracket(alg.bracket(b, c), a)
                    + alg.bracket(alg.bracket(c, a), b)
                )
                yield j.is_zero() and alg.bracket(a, a).is_zero(), repr((a, b, c))

        checks.append(_count("jacobi", cname, jacobi()))

        z = alg.h_element()
        k_basis, p_basis = alg.k_basis(), alg.p_basis()
        bad = sum(0 if alg.bracket(z, kb).is_zero() else 1 for kb in k_basis)
        checks.append(_check("h-element-central", cname, len(k_basis), bad))
        bad = sum(
            0 if alg.bracket(z, alg.bracket(z, pb)) == (-pb) else 1 for pb in p_basis
        )
        checks.append(_check("h-element-square", cname, len(p_basis), bad))
        bad = sum(
            0
            if alg.p_to_complexified(alg.bracket(z, pb))
            == alg.p_to_complexified(pb).scale(Scalar.i())
            else 1
            for pb in p_basis
        )
        checks.append(_check("complex-structure-intertwines", cname, len(p_basis), bad))

        d = alg.grading_element()
        xp = alg.element(plus=random_element(alg.algebra, rng))
        ym = alg.element(minus=random_element(alg.algebra, rng))
        ok = alg.bracket(d, xp) == xp and alg.bracket(d, ym) == (-ym)
        checks.append(_check("grading-element", cname, 2, 0 if ok else 1))

        def invariance():
            for _ in range(samples):
                a, b, c = rand_elt(), rand_elt(), rand_elt()
                lhs = alg.invariant_form(alg.bracket(c, a), b) + alg.invariant_form(
                    a, alg.bracket(c, b)
                )
                yield lhs == 0, repr((a, b, c))

        checks.append(_count("form-ad-invariance", cname, invariance()))

        gram_k = tuple(
            tuple(Scalar(alg.invariant_form(a, b)) for b in k_basis) for a in k_basis
        )
        gram_p = tuple(
            tuple(Scalar(alg.invariant_form(a, b)) for b in p_basis) for a in p_basis
        )
        dk, _ = linalg.congruent_diagonal(gram_k)
        dp, _ = linalg.congruent_diagonal(gram_p)
        ok = all(x.re < 0 for x in dk) and all(x.re > 0 for x in dp)
        checks.append(_check("form-definiteness", cname, len(dk) + len(dp), 0 if ok else 1))

        def brackets_split():
            for _ in range(max(4, samples // 4)):
                k1, k2 = rng.choice(k_basis), rng.choice(k_basis)
                p1, p2 = rng.choice(p_basis), rng.choice(p_basis)
                kk = alg.bracket(k1, k2)
                kp = alg.bracket(k1, p1)
                pp = alg.bracket(p1, p2)
                in_k = lambda v: alg.theta(v) == v
                in_p = lambda v: alg.theta(v) == (-v)
                yield in_k(kk) and in_p(kp) and in_k(pp), repr((k1, p1))

        checks.append(_count("cartan-relations", cname, brackets_split()))
    return checks


@register("moment-identity")
def moment_suite(case=None, samples=25, seed=0):
    rng = random.Random(seed)
    cases = list(CLASSICAL_CASES) if case in (None, "-", "all") else [case]
    checks = []
    for cname in cases:
        level = CASE_LEVEL[cname]
        s = 2

        def rand_wmap(span=2):
            rows = [
                [_rand_cd(rng, level, span=span) for _ in range(s)] for _ in range(6)
            ]
            return WMap(cname, rows)

        def rand_lie_h():
            rows = [[CDNumber.zero(level) for _ in range(s)] for _ in range(s)]
            for i in range(s):
                coeffs = [Scalar(0)] + [
                    Scalar(Fraction(rng.randint(-2, 2)))
                    for _ in range((1 << level) - 1)
                ]
                rows[i][i] = CDNumber(level, coeffs)
            for i in range(s):
                for j in range(i + 1, s):
                    q = _rand_cd(rng, level, span=2)
                    rows[i][j] = q
                    rows[j][i] = -q.conjugate()
            return cdm.from_rows(rows)

        def rand_lie_g():
            a = cdm.from_rows(
                [[_rand_cd(rng, level, span=2) for _ in range(3)] for _ in range(3)]
            )
            from .reduction import _random_hermitian3

            x = _random_hermitian3(cname, rng)
            y = _random_hermitian3(cname, rng)
            ma = cdm.neg(cdm.conj_transpose(a))
            return tuple(ra + rx for ra, rx in zip(a, x)) + tuple(
                ry + rm for ry, rm in zip(y, ma)
            )

        def dagger_identity():
            units6 = [
                tuple(
                    CDNumber.one(level) if i == r else CDNumber.zero(level)
                    for i in range(6)
                )
                for r in range(6)
            ]
            units_s = [
                tuple(
                    CDNumber.one(level) if i == t else CDNumber.zero(level)
                    for i in range(s)
                )
                for t in range(s)
            ]
            for _ in range(samples):
                alpha = rand_wmap()
                dag = dagger(alpha)
                ok = True
                for u in units6:
                    for v in units_s:
                        du = [
                            sum(
                                (cd_mul(dag[i][r], u[r]) for r in range(6)),
                                CDNumber.zero(level),
                            )
                            for i in range(s)
                        ]
                        lhs = sum(
                            (cd_mul(du[i].conjugate(), v[i]) for i in range(s)),
                            CDNumber.zero(level),
                        )
                        av = [
                            sum(
                                (cd_mul(alpha.matrix[r][t], v[t]) for t in range(s)),
                                CDNumber.zero(level),
                            )
                            for r in range(6)
                        ]
                        if lhs != b_form(cname, u, av):
                            ok = False
                yield ok, repr(alpha.matrix)

        checks.append(_count("dagger-defining-identity", cname, dagger_identity()))

        def membership():
            for _ in range(samples):
                alpha = rand_wmap()
                yield in_lie_h(cname, mu_h(alpha)) and in_lie_g(cname, mu_g(alpha)), repr(
                    alpha.matrix
                )

        checks.append(_count("momentum-membership", cname, membership()))

        def residuals():
            for _ in range(samples):
                alpha, delta = rand_wmap(), rand_wmap()
                xi, eta = rand_lie_h(), rand_lie_g()
                ok = (
                    moment_identity_residual_h(alpha, xi, delta).is_zero()
                    and moment_identity_residual_g(alpha, eta, delta).is_zero()
                )
                yield ok, repr((alpha.matrix, xi, eta))

        checks.append(_count("moment-identity", cname, residuals()))

        def equivariance():
            for _ in range(max(4, samples // 2)):
                alpha = rand_wmap()
                for x in h_group_generators(cname, s, rng, count=1):
                    lhs = mu_h(act_h(alpha, x))
                    xinv = cdm.inverse(x)
                    rhs = cdm.mul(cdm.mul(x, mu_h(alpha)), xinv)
                    if lhs != rhs:
                        yield False, repr((alpha.matrix, x))
                        break
                else:
                    from .reduction import act_g

                    ok = True
                    for y in g_group_generators(cname, rng, count=1):
                        lhs = mu_g(act_g(alpha, y))
                        rhs = cdm.mul(cdm.mul(y, mu_g(alpha)), cdm.inverse(y))
                        if lhs != rhs:
                            ok = False
                    yield ok, repr(alpha.matrix)

        checks.append(_count("equivariance", cname, equivariance()))

        def dual_pair():
            for _ in range(samples):
                alpha = rand_wmap()
                xi, eta = rand_lie_h(), rand_lie_g()
                lhs = h_infinitesimal(g_infinitesimal(alpha, eta), xi)
                rhs = g_infinitesimal(h_infinitesimal(alpha, xi), eta)
                yield lhs == rhs, repr(alpha.matrix)

        checks.append(_count("dual-pair-commutes", cname, dual_pair()))

        def antisymmetry():
            for _ in range(samples):
                alpha = rand_wmap()
                yield symplectic_form(alpha, alpha).is_zero(), repr(alpha.matrix)

        checks.append(_count("symplectic-antisymmetry", cname, antisymmetry()))

        width = (1 << level) * 6 * s
        real_basis = []
        for r in range(6):
            for t in range(s):
                for k in range(1 << level):
                    rows = [[CDNumber.zero(level) for _ in range(s)] for _ in range(6)]
                    rows[r][t] = CDNumber.unit(level, k)
                    real_basis.append(WMap(cname, rows))
        gram = tuple(
            tuple(symplectic_form(a, b) for b in real_basis) for a in real_basis
        )
        rank = linalg.rank(gram)
        checks.append(
            _check("symplectic-nondegenerate", cname, width, 0 if rank == width else 1, str(rank))
        )
    return checks


@register("reduction")
def reduction_suite(case=None, samples=20, seed=0):
    rng = random.Random(seed)
    cases = list(CLASSICAL_CASES) if case in (None, "-", "all") else [case]
    checks = []
    for cname in cases:
        def strata_hit():
            for k in (0, 1, 2, 3):
                for _ in range(max(1, samples // 4)):
                    alpha = zero_level_sample(cname, 3, k, rng)
                    ok = cdm.is_zero(mu_h(alpha)) and stratum(alpha) == k
                    yield ok, repr(alpha.matrix)

        checks.append(_count("zero-level-strata", cname, strata_hit()))

        def h_invariance():
            for _ in range(samples):
                alpha = zero_level_sample(cname, 3, rng.choice([1, 2]), rng)
                x = h_group_generators(cname, 3, rng, count=1)[0]
                yield reduced_point(act_h(alpha, x)) == reduced_point(alpha), repr(
                    alpha.matrix
                )

        checks.append(_count("reduced-point-h-invariant", cname, h_invariance()))

        def saturation():
            for k in (1, 2, 3):
                for _ in range(max(1, samples // 3)):
                    alpha = zero_level_sample(cname, 4, k, rng)
                    yield stratum(alpha) <= 3, repr(alpha.matrix)

        checks.append(_count("saturation-above-rank", cname, saturation()))

        def lifts():
            for _ in range(samples):
                rank = rng.choice([0, 1, 1, 2, 2])
                z = liftable_sample(cname, rank, 2, rng)
                alpha = hilbert_lift(z, 2)
                ok = cdm.is_zero(mu_h(alpha)) and reduced_point(alpha) == z
                yield ok, repr(z)

        checks.append(_count("hilbert-lift-round-trip", cname, lifts()))

        expected = {"real": (2, 5, 8), "complex": (5, 11, 17), "quaternionic": (11, 23, 35)}
        got = dims_projective_chain(cname)
        checks.append(
            _check(
                "projective-dimension-chain",
                cname,
                3,
                0 if got == expected[cname] else 1,
                str(got),
            )
        )
    return checks


@register("oscillator")
def oscillator_suite(case=None, samples=30, seed=0):
    rng = random.Random(seed)
    checks = []

    def zero_j_classification():
        for _ in range(samples):
            k = rng.choice([0, 1, 2, 3])
            s = rng.choice([3, 4])
            c = oscillator_sample(s, k, rng)
            j = angular_momentum(c)
            ok = all(x == 0 for row in j for x in row)
            ok = ok and classify_config(c) == stratum(encode_oscillator(c)) == k
            yield ok, repr(c.to_json())

    checks.append(_count("mechanical-vs-jordan-stratum", "real", zero_j_classification()))

    def parallel_momenta():
        for _ in range(samples):
            q = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            lam = Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
            p = [[lam * x for x in row] for row in q]
            c = OscillatorConfig(q, p)
            j = angular_momentum(c)
            yield all(x == 0 for row in j for x in row), repr(c.to_json())

    checks.append(_count("parallel-momenta-zero-j", "real", parallel_momenta()))

    zero = OscillatorConfig([[0] * 3] * 3, [[0] * 3] * 3)
    ok = classify_config(zero) == 0 and stratum(encode_oscillator(zero)) == 0
    checks.append(_check("zero-configuration", "real", 1, 0 if ok else 1))
    return checks


@register("poisson-rank")
def poisson_suite(case=None, samples=10, seed=0):
    rng = random.Random(seed)
    cases = list(CLASSICAL_CASES) if case in (None, "-", "all") else [case]
    checks = []
    for cname in cases:
        per_stratum = {}
        bad = 0
        witness = None
        for k in (1, 2, 3):
            vals = set()
            for _ in range(samples):
                alpha = zero_level_sample(cname, 3, k, rng)
                vals.add(poisson_rank_at_matrix(cname, mu_g(alpha)))
            per_stratum[k] = vals
            if len(vals) != 1:
                bad += 1
                witness = f"stratum {k}: ranks {sorted(vals)}"
        checks.append(_check("rank-constant-per-stratum", cname, 3 * samples, bad, witness))
        seq = [min(per_stratum[k]) for k in (1, 2, 3)]
        ok = seq[0] < seq[1] < seq[2]
        checks.append(
            _check("rank-strictly-monotone", cname, 3, 0 if ok else 1, str(seq))
        )
    tkk_case = {"real": "sp3", "complex": "u33", "quaternionic": "so12"}
    for cname in cases:
        cp = case_poisson(tkk_case[cname])
        cas = cp.casimir()

        def casimir_commutes():
            for _ in range(samples * 2):
                coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(cp.dim)]
                g = PolyFn.linear(cp.case, cp.dim, coeffs)
                if rng.random() < 0.5:
                    g = g * g
                yield cp.bracket(cas, g).is_zero(), f"coeffs {coeffs}"

        checks.append(_count("casimir-commutes", tkk_case[cname], casimir_commutes()))

        def linear_bracket():
            alg = cp.alg
            for _ in range(max(3, samples // 2)):
                u = alg.from_coords([Fraction(rng.randint(-2, 2)) for _ in range(alg.dim)])
                v = alg.from_coords([Fraction(rng.randint(-2, 2)) for _ in range(alg.dim)])
                lhs = cp.bracket(cp.linear_fn(u), cp.linear_fn(v))
                yield lhs == cp.linear_fn(alg.bracket(u, v)), "-"

        checks.append(_count("linear-functions-bracket", tkk_case[cname], linear_bracket()))

    # octonionic stratum detection through the e7 algebra at embedded points
    vals = []
    for k in (1, 2):
        x = rank_k_sample("O", k, rng)
        vals.append(poisson_rank_at(embed_reduced_point(x)))
    checks.append(
        _check("e7-embedded-rank-monotone", "e7", 2, 0 if vals[0] < vals[1] else 1, str(vals))
    )
    return checks


@register("dimension-audit")
def dimension_audit_suite(case=None, samples=5, seed=0):
    rng = random.Random(seed)
    checks = []
    dims = [JordanElement.space_dim(a) for a in ALGEBRAS]
    checks.append(_check("jordan-dims", "-", 4, 0 if dims == [6, 9, 15, 27] else 1, str(dims)))
    m = [d - 1 for d in dims]
    checks.append(_check("ambient-m-table", "-", 4, 0 if m == [5, 8, 14, 26] else 1, str(m)))
    n = [closed_orbit_tangent_dim(a) - 1 for a in ALGEBRAS]
    checks.append(_check("closed-orbit-n-table", "-", 4, 0 if n == [2, 4, 8, 16] else 1, str(n)))
    rel = all(Fraction(3, 2) * nn + 2 == mm for nn, mm in zip(n, m))
    checks.append(_check("critical-relation", "-", 4, 0 if rel else 1))
    tkk_dims = [tkk_algebra(c).dim for c in TKK_CASES]
    checks.append(
        _check("tkk-dims", "-", 4, 0 if tkk_dims == [21, 35, 66, 133] else 1, str(tkk_dims))
    )
    str_dims = [tkk_algebra(c).str_dim for c in TKK_CASES]
    checks.append(
        _check("str-dims", "-", 4, 0 if str_dims == [9, 17, 36, 79] else 1, str(str_dims))
    )
    chains = {c: dims_projective_chain(c) for c in CLASSICAL_CASES}
    expected = {"real": (2, 5, 8), "complex": (5, 11, 17), "quaternionic": (11, 23, 35)}
    ok = chains == expected
    checks.append(_check("projective-chains", "-", 3, 0 if ok else 1, str(chains)))
    return checks
