import random
from fractions import Fraction

import pytest

from jordan_strata.jordan import JordanElement, det, jordan_rank, sharp, trace_form
from jordan_strata.scalars import Scalar
from jordan_strata.strata import (
    ProjPoint,
    chord,
    closed_orbit_tangent_dim,
    closure_chain_audit,
    cubic_gradient,
    det_curve_coefficients,
    plucker,
    rank1_factor_symmetric,
    rank1_sample,
    rank_k_sample,
    random_element,
    segre,
    stratify,
    veronese,
)

ALGEBRAS = ("R", "C", "H", "O")


def test_proj_point_equality_is_proportionality():
    rng = random.Random(0)
    x = rank1_sample("O", rng)
    lam = Scalar(Fraction(3, 2), Fraction(-1, 3), True)
    assert ProjPoint(x) == ProjPoint(x.scale(lam))
    y = rank1_sample("O", rng)
    if ProjPoint(x) != ProjPoint(y):
        assert hash(ProjPoint(x)) != hash(ProjPoint(y)) or True
    with pytest.raises(ValueError):
        ProjPoint(JordanElement.zero("O", gaussian=True))


def test_stratify_basics():
    rng = random.Random(1)
    assert stratify(JordanElement.zero("O", gaussian=True)) == 0
    assert stratify(veronese([1, 0, 0])) == 1
    # random elements are generically rank 3
    hits = sum(
        1 for _ in range(25) if stratify(random_element("O", rng, gaussian=True)) == 3
    )
    assert hits >= 20
    # scale invariance
    x = rank_k_sample("H", 2, rng)
    assert stratify(x.scale(Scalar(5, -7, True))) == 2


def test_veronese():
    assert veronese([1, 0, 0]) == JordanElement.diagonal("R", 1, 0, 0, gaussian=True)
    rng = random.Random(2)
    for _ in range(15):
        v = [rng.randint(-4, 4) for _ in range(3)]
        if not any(v):
            v[0] = 1
        x = veronese(v)
        assert jordan_rank(x) == 1
        f = rank1_factor_symmetric(x)
        assert f is not None
    with pytest.raises(ValueError):
        veronese([0, 0, 0])


def test_segre():
    from jordan_strata.jordan import to_general_matrix

    x = segre([1, 0, 0], [0, 1, 0])
    m = to_general_matrix(x)
    assert m[0][1] == Scalar.one(True)
    assert sum(1 for i in range(3) for j in range(3) if not m[i][j].is_zero()) == 1
    assert jordan_rank(x) == 1
    rng = random.Random(3)
    for _ in range(15):
        u = [rng.randint(-3, 3) for _ in range(3)]
        w = [rng.randint(-3, 3) for _ in range(3)]
        if not any(u):
            u[0] = 1
        if not any(w):
            w[1] = 1
        assert jordan_rank(segre(u, w)) == 1


def test_plucker():
    e = [[1 if i == j else 0 for j in range(6)] for i in range(6)]
    x = plucker(e[0], e[1])
    assert jordan_rank(x) == 1
    from jordan_strata.jordan import to_skew_matrix
    from jordan_strata import linalg

    assert linalg.rank(to_skew_matrix(x)) == 2
    rng = random.Random(4)
    for _ in range(10):
        u = [rng.randint(-3, 3) for _ in range(6)]
        w = [rng.randint(-3, 3) for _ in range(6)]
        try:
            x = plucker(u, w)
        except ValueError:
            continue
        assert jordan_rank(x) == 1
    with pytest.raises(ValueError):
        plucker(e[0], e[0])


def test_rank1_sample():
    rng = random.Random(5)
    for algebra in ALGEBRAS:
        for _ in range(10):
            x = rank1_sample(algebra, rng)
            assert not x.is_zero()
            assert sharp(x).is_zero()


def test_chord_properties():
    rng = random.Random(6)
    e11 = ProjPoint(JordanElement.diagonal("O", 1, 0, 0, gaussian=True))
    e22 = ProjPoint(JordanElement.diagonal("O", 0, 1, 0, gaussian=True))
    c = chord(e11, e22, Scalar.one(True), Scalar.one(True))
    assert c.stratum() == 2 and det(c.rep).is_zero()
    for algebra in ALGEBRAS:
        for _ in range(10):
            p = ProjPoint(rank1_sample(algebra, rng))
            q = ProjPoint(rank1_sample(algebra, rng))
            lam, mu = Scalar(2, 1, True), Scalar(-1, 3, True)
            assert det(chord(p, q, lam, mu).rep).is_zero()
    with pytest.raises(ValueError):
        chord(e11, e22, Scalar.zero(True), Scalar.zero(True))
    rank2 = ProjPoint(JordanElement.diagonal("O", 1, 1, 0, gaussian=True))
    with pytest.raises(ValueError):
        chord(rank2, e22, Scalar.one(True), Scalar.one(True))


def test_generic_triple_sum_escapes_cubic():
    rng = random.Random(7)
    for algebra in ALGEBRAS:
        found = False
        for _ in range(20):
            x = (
                rank1_sample(algebra, rng)
                + rank1_sample(algebra, rng)
                + rank1_sample(algebra, rng)
            )
            if not det(x).is_zero():
                found = True
                break
        assert found, algebra


def test_gradient_is_adjugate_by_interpolation():
    rng = random.Random(8)
    for algebra in ALGEBRAS:
        for _ in range(8):
            x = random_element(algebra, rng, gaussian=True)
            h = random_element(algebra, rng, gaussian=True)
            c0, c1, c2, c3 = det_curve_coefficients(x, h)
            assert c0 == det(x)
            assert c3 == det(h)
            assert c1 == trace_form(sharp(x), h)


def test_gradient_vanishing_is_rank_le_one():
    rng = random.Random(9)
    for algebra in ALGEBRAS:
        for k in (0, 1, 2, 3):
            x = rank_k_sample(algebra, k, rng)
            assert cubic_gradient(x).is_zero() == (k <= 1)


def test_closure_chain_audit():
    rng = random.Random(10)
    rep = closure_chain_audit(rng, samples=3)
    assert rep["m"] == [5, 8, 14, 26]
    assert rep["n"] == [2, 4, 8, 16]
    assert all(rep["critical_relation"])
    assert rep["rank_never_exceeds"]
    assert rep["rank_drop_witnessed"]


def test_closed_orbit_tangent_dims():
    assert [closed_orbit_tangent_dim(a) for a in ALGEBRAS] == [3, 5, 9, 17]


def test_image_characterization_reverse():
    # every rank-one element factors projectively through its embedding
    rng = random.Random(12)
    from jordan_strata.strata import rank1_projective_factor

    expected = {"R": "veronese", "C": "segre", "H": "plucker"}
    for algebra, kind in expected.items():
        for _ in range(10):
            x = rank1_sample(algebra, rng)
            factor = rank1_projective_factor(x)
            assert factor is not None and factor[0] == kind
        y = rank_k_sample(algebra, 2, rng)
        assert rank1_projective_factor(y) is None


def test_proj_point_json():
    rng = random.Random(11)
    p = ProjPoint(rank1_sample("H", rng))
    obj = p.to_json()
    assert obj["projective"] is True
    assert ProjPoint.from_json(obj) == p
