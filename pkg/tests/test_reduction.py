import random
from fractions import Fraction

import pytest

from jordan_strata import cdmatrix as cdm
from jordan_strata.cayley_dickson import CDNumber, cd_mul
from jordan_strata.jordan import JordanElement, jordan_rank
from jordan_strata.lifts import LiftError, hilbert_lift, liftable_sample
from jordan_strata.reduction import (
    CASE_LEVEL,
    OscillatorConfig,
    WMap,
    act_g,
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
from jordan_strata.scalars import Scalar

CASES = ("real", "complex", "quaternionic")


def rand_wmap(case, s, rng, span=2):
    level = CASE_LEVEL[case]
    rows = [
        [
            CDNumber(
                level,
                [Scalar(Fraction(rng.randint(-span, span), rng.choice([1, 2])))
                 for _ in range(1 << level)],
            )
            for _ in range(s)
        ]
        for _ in range(6)
    ]
    return WMap(case, rows)


def rand_lie_h(case, s, rng):
    level = CASE_LEVEL[case]
    rows = [[CDNumber.zero(level) for _ in range(s)] for _ in range(s)]
    for i in range(s):
        coeffs = [Scalar(0)] + [Scalar(Fraction(rng.randint(-2, 2)))
                                for _ in range((1 << level) - 1)]
        rows[i][i] = CDNumber(level, coeffs)
    for i in range(s):
        for j in range(i + 1, s):
            q = CDNumber(level, [Scalar(Fraction(rng.randint(-2, 2)))
                                 for _ in range(1 << level)])
            rows[i][j] = q
            rows[j][i] = -q.conjugate()
    return cdm.from_rows(rows)


def rand_lie_g(case, rng):
    from jordan_strata.reduction import _random_hermitian3

    level = CASE_LEVEL[case]
    a = cdm.from_rows(
        [
            [CDNumber(level, [Scalar(Fraction(rng.randint(-2, 2)))
                              for _ in range(1 << level)]) for _ in range(3)]
            for _ in range(3)
        ]
    )
    x = _random_hermitian3(case, rng)
    y = _random_hermitian3(case, rng)
    ma = cdm.neg(cdm.conj_transpose(a))
    return tuple(ra + rx for ra, rx in zip(a, x)) + tuple(
        ry + rm for ry, rm in zip(y, ma)
    )


@pytest.mark.parametrize("case", CASES)
def test_dagger_defining_identity_on_basis_pairs(case):
    rng = random.Random(0)
    s, level = 2, CASE_LEVEL[case]
    for _ in range(5):
        alpha = rand_wmap(case, s, rng)
        dag = dagger(alpha)
        for r in range(6):
            u = [CDNumber.zero(level) for _ in range(6)]
            u[r] = CDNumber.one(level)
            for t in range(s):
                v = [CDNumber.zero(level) for _ in range(s)]
                v[t] = CDNumber.one(level)
                du = [
                    sum((cd_mul(dag[i][k], u[k]) for k in range(6)),
                        CDNumber.zero(level))
                    for i in range(s)
                ]
                lhs = sum(
                    (cd_mul(du[i].conjugate(), v[i]) for i in range(s)),
                    CDNumber.zero(level),
                )
                av = [
                    sum((cd_mul(alpha.matrix[k][t2], v[t2]) for t2 in range(s)),
                        CDNumber.zero(level))
                    for k in range(6)
                ]
                assert lhs == b_form(case, u, av)


@pytest.mark.parametrize("case", CASES)
def test_zero_map_and_membership(case):
    rng = random.Random(1)
    zero = WMap.zero(case, 2)
    assert cdm.is_zero(mu_h(zero)) and cdm.is_zero(mu_g(zero))
    for _ in range(10):
        alpha = rand_wmap(case, 2, rng)
        assert in_lie_h(case, mu_h(alpha))
        assert in_lie_g(case, mu_g(alpha))


@pytest.mark.parametrize("case", CASES)
def test_moment_identity_exact(case):
    from jordan_strata.reduction import moment_identity_check

    rng = random.Random(2)
    for _ in range(8):
        alpha = rand_wmap(case, 2, rng)
        delta = rand_wmap(case, 2, rng)
        xi = rand_lie_h(case, 2, rng)
        eta = rand_lie_g(case, rng)
        assert in_lie_h(case, xi) and in_lie_g(case, eta)
        assert moment_identity_residual_h(alpha, xi, delta).is_zero()
        assert moment_identity_residual_g(alpha, eta, delta).is_zero()
        assert moment_identity_check(alpha, xi, delta, side="h").is_zero()
        assert moment_identity_check(alpha, eta, delta, side="g").is_zero()


@pytest.mark.parametrize("case", CASES)
def test_symplectic_form(case):
    rng = random.Random(3)
    for _ in range(10):
        a, b = rand_wmap(case, 2, rng), rand_wmap(case, 2, rng)
        assert symplectic_form(a, a).is_zero()
        assert symplectic_form(a, b) == -symplectic_form(b, a)


@pytest.mark.parametrize("case", CASES)
def test_equivariance(case):
    rng = random.Random(4)
    for _ in range(4):
        alpha = rand_wmap(case, 2, rng)
        for x in h_group_generators(case, 2, rng, count=2):
            assert mu_h(act_h(alpha, x)) == cdm.mul(cdm.mul(x, mu_h(alpha)), cdm.inverse(x))
            assert mu_g(act_h(alpha, x)) == mu_g(alpha)
        for y in g_group_generators(case, rng, count=2):
            assert mu_g(act_g(alpha, y)) == cdm.mul(cdm.mul(y, mu_g(alpha)), cdm.inverse(y))
            assert mu_h(act_g(alpha, y)) == mu_h(alpha)


@pytest.mark.parametrize("case", CASES)
def test_dual_pair_actions_commute(case):
    rng = random.Random(5)
    for _ in range(8):
        alpha = rand_wmap(case, 2, rng)
        xi = rand_lie_h(case, 2, rng)
        eta = rand_lie_g(case, rng)
        lhs = h_infinitesimal(g_infinitesimal(alpha, eta), xi)
        rhs = g_infinitesimal(h_infinitesimal(alpha, xi), eta)
        assert lhs == rhs


@pytest.mark.parametrize("case", CASES)
def test_zero_level_sampler(case):
    rng = random.Random(6)
    for k in (0, 1, 2, 3):
        alpha = zero_level_sample(case, 3, k, rng)
        assert cdm.is_zero(mu_h(alpha))
        assert stratum(alpha) == k
    with pytest.raises(ValueError):
        zero_level_sample(case, 2, 3, rng)


@pytest.mark.parametrize("case", CASES)
def test_saturation_above_rank(case):
    rng = random.Random(7)
    for k in (1, 2, 3):
        alpha = zero_level_sample(case, 4, k, rng)
        assert stratum(alpha) == k <= 3


@pytest.mark.parametrize("case", CASES)
def test_reduced_point_h_invariance(case):
    rng = random.Random(8)
    for _ in range(5):
        alpha = zero_level_sample(case, 3, rng.choice([1, 2]), rng)
        z = reduced_point(alpha)
        for x in h_group_generators(case, 3, rng, count=1):
            assert reduced_point(act_h(alpha, x)) == z


def test_reduced_point_requires_zero_level():
    rng = random.Random(9)
    alpha = rand_wmap("real", 2, rng)
    while cdm.is_zero(mu_h(alpha)):
        alpha = rand_wmap("real", 2, rng)
    with pytest.raises(ValueError):
        reduced_point(alpha)


def test_hilbert_lift_explicit_examples():
    e11 = JordanElement.diagonal("R", 1, 0, 0, gaussian=True)
    alpha = hilbert_lift(e11, 1)
    assert reduced_point(alpha) == e11
    zero = JordanElement.zero("R", gaussian=True)
    assert reduced_point(hilbert_lift(zero, 2)) == zero
    with pytest.raises(ValueError):
        hilbert_lift(JordanElement.identity("R", True), 2)  # rank 3 > s


@pytest.mark.parametrize("case", CASES)
def test_hilbert_lift_round_trip(case):
    rng = random.Random(10)
    for _ in range(12):
        rank = rng.choice([0, 1, 1, 2])
        z = liftable_sample(case, rank, 2, rng)
        assert jordan_rank(z) == rank
        alpha = hilbert_lift(z, 2)
        assert cdm.is_zero(mu_h(alpha))
        assert reduced_point(alpha) == z


def test_hilbert_lift_repeated_invariants():
    # diag(1,1,0) has a repeated splitting invariant; the fallback search
    # must still produce an exact two-column lift
    z = JordanElement.diagonal("R", 1, 1, 0, gaussian=True)
    alpha = hilbert_lift(z, 2)
    assert cdm.is_zero(mu_h(alpha))
    assert reduced_point(alpha) == z


def test_hilbert_lift_obstruction_reported():
    # i*E11 with a single column is square-class obstructed over Q(i)
    target = JordanElement.diagonal("R", 0, 0, 0, gaussian=True)
    bad = JordanElement.combine_real_imag(
        JordanElement.zero("R"), JordanElement.diagonal("R", 3, 0, 0)
    )
    assert jordan_rank(bad) == 1
    with pytest.raises(LiftError):
        hilbert_lift(bad, 1)
    del target


def test_dims_projective_chain():
    assert dims_projective_chain("real") == (2, 5, 8)
    assert dims_projective_chain("complex") == (5, 11, 17)
    assert dims_projective_chain("quaternionic") == (11, 23, 35)


def test_oscillator_angular_momentum_matches_mu_h():
    rng = random.Random(11)
    for _ in range(10):
        q = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        p = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        c = OscillatorConfig(q, p)
        j = angular_momentum(c)
        mh = mu_h(encode_oscillator(c))
        for a in range(3):
            for b in range(3):
                assert mh[a][b].coeffs[0].re == j[a][b]


def test_oscillator_classification():
    rng = random.Random(12)
    # momenta parallel to positions: zero angular momentum
    for _ in range(10):
        q = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        lam = Fraction(rng.randint(-2, 2), rng.choice([1, 2]))
        c = OscillatorConfig(q, [[lam * x for x in row] for row in q])
        j = angular_momentum(c)
        assert all(x == 0 for row in j for x in row)
    # all momenta zero: stratum = rank of position span
    q = [[1, 0, 0], [2, 0, 0], [3, 0, 0]]
    c = OscillatorConfig(q, [[0] * 3] * 3)
    assert classify_config(c) == 1 == stratum(encode_oscillator(c))
    # zero-angular-momentum samples match the reduced stratum
    for k in (0, 1, 2, 3):
        c = oscillator_sample(3, k, rng)
        assert classify_config(c) == k == stratum(encode_oscillator(c))


def test_wmap_json_round_trip():
    rng = random.Random(13)
    for case in CASES:
        alpha = rand_wmap(case, 2, rng)
        assert WMap.from_json(alpha.to_json()) == alpha
    c = oscillator_sample(3, 2, rng)
    assert OscillatorConfig.from_json(c.to_json()).q == c.q
