import random
from fractions import Fraction

import pytest

from jordan_strata import linalg
from jordan_strata.jordan import JordanElement
from jordan_strata.scalars import Scalar
from jordan_strata.strata import random_element
from jordan_strata.tkk import (
    CASES,
    TKKElement,
    jcoords,
    tkk_algebra,
)

DIMS = {"sp3": (9, 21), "u33": (17, 35), "so12": (36, 66), "e7": (79, 133)}
SMALL_CASES = ("sp3", "u33")


def rand_tkk(alg, rng):
    sp = alg.space
    w = random_element(alg.algebra, rng)
    a = random_element(alg.algebra, rng)
    b = random_element(alg.algebra, rng)
    mid = linalg.frac_add(
        sp.lmat(jcoords(w)),
        linalg.frac_commutator(sp.lmat(jcoords(a)), sp.lmat(jcoords(b))),
    )
    return TKKElement(alg.case, random_element(alg.algebra, rng), mid,
                      random_element(alg.algebra, rng))


@pytest.mark.parametrize("case", CASES)
def test_dimension_audit(case):
    alg = tkk_algebra(case)
    assert (alg.str_dim, alg.dim) == DIMS[case]
    kb, pb = alg.cartan_split()
    assert len(kb) + len(pb) == alg.dim


@pytest.mark.parametrize("case", CASES)
def test_left_mul_and_box_basics(case):
    alg = tkk_algebra(case)
    rng = random.Random(1)
    ident = JordanElement.identity(alg.algebra)
    id_op = linalg.frac_mat(
        [[1 if i == j else 0 for j in range(alg.space.dim)] for i in range(alg.space.dim)]
    )
    assert alg.left_mul(ident) == id_op
    assert alg.box(ident, ident) == id_op
    for _ in range(5):
        x = random_element(alg.algebra, rng)
        y = random_element(alg.algebra, rng)
        lhs = linalg.frac_sub(alg.box(x, y), alg.box(y, x))
        comm = linalg.frac_commutator(alg.left_mul(x), alg.left_mul(y))
        assert lhs == linalg.frac_scale(comm, 2)


@pytest.mark.parametrize("case", SMALL_CASES)
def test_bracket_antisymmetry_and_jacobi(case):
    alg = tkk_algebra(case)
    rng = random.Random(2)
    for _ in range(12):
        a, b, c = rand_tkk(alg, rng), rand_tkk(alg, rng), rand_tkk(alg, rng)
        assert alg.bracket(a, a).is_zero()
        j = (
            alg.bracket(alg.bracket(a, b), c)
            + alg.bracket(alg.bracket(b, c), a)
            + alg.bracket(alg.bracket(c, a), b)
        )
        assert j.is_zero()


def test_bracket_closes_in_structure_algebra():
    alg = tkk_algebra("sp3")
    rng = random.Random(3)
    for _ in range(6):
        a, b = rand_tkk(alg, rng), rand_tkk(alg, rng)
        # str_coords raises if the mid part leaves the span
        alg.str_coords(alg.bracket(a, b).mid)


@pytest.mark.parametrize("case", CASES)
def test_grading_element(case):
    alg = tkk_algebra(case)
    rng = random.Random(4)
    d = alg.grading_element()
    xp = alg.element(plus=random_element(alg.algebra, rng))
    ym = alg.element(minus=random_element(alg.algebra, rng))
    assert alg.bracket(d, xp) == xp
    assert alg.bracket(d, ym) == (-ym)


@pytest.mark.parametrize("case", SMALL_CASES)
def test_theta_is_involutive_automorphism(case):
    alg = tkk_algebra(case)
    rng = random.Random(5)
    for _ in range(6):
        a, b = rand_tkk(alg, rng), rand_tkk(alg, rng)
        assert alg.theta(alg.theta(a)) == a
        assert alg.theta(alg.bracket(a, b)) == alg.bracket(alg.theta(a), alg.theta(b))


@pytest.mark.parametrize("case", CASES)
def test_h_element_axioms(case):
    alg = tkk_algebra(case)
    z = alg.h_element()
    for kb in alg.k_basis():
        assert alg.bracket(z, kb).is_zero()
    for pb in alg.p_basis():
        assert alg.bracket(z, alg.bracket(z, pb)) == (-pb)
        assert not alg.bracket(z, pb).is_zero()


@pytest.mark.parametrize("case", CASES)
def test_p_identification_intertwines_i(case):
    alg = tkk_algebra(case)
    for pb in alg.p_basis():
        z = alg.h_element()
        lhs = alg.p_to_complexified(alg.bracket(z, pb))
        rhs = alg.p_to_complexified(pb).scale(Scalar.i())
        assert lhs == rhs
        assert alg.complexified_to_p(alg.p_to_complexified(pb)) == pb


@pytest.mark.parametrize("case", SMALL_CASES)
def test_cartan_relations(case):
    alg = tkk_algebra(case)
    rng = random.Random(6)
    kb, pb = alg.k_basis(), alg.p_basis()
    in_k = lambda v: alg.theta(v) == v
    in_p = lambda v: alg.theta(v) == (-v)
    for _ in range(8):
        k1, k2 = rng.choice(kb), rng.choice(kb)
        p1, p2 = rng.choice(pb), rng.choice(pb)
        assert in_k(alg.bracket(k1, k2))
        assert in_p(alg.bracket(k1, p1))
        assert in_k(alg.bracket(p1, p2))


@pytest.mark.parametrize("case", SMALL_CASES)
def test_invariant_form(case):
    alg = tkk_algebra(case)
    rng = random.Random(7)
    for _ in range(8):
        a, b, c = rand_tkk(alg, rng), rand_tkk(alg, rng), rand_tkk(alg, rng)
        assert alg.invariant_form(a, b) == alg.invariant_form(b, a)
        assert (
            alg.invariant_form(alg.bracket(c, a), b)
            + alg.invariant_form(a, alg.bracket(c, b))
            == 0
        )
    kb, pb = alg.k_basis(), alg.p_basis()
    gram_k = tuple(tuple(Scalar(alg.invariant_form(x, y)) for y in kb) for x in kb)
    gram_p = tuple(tuple(Scalar(alg.invariant_form(x, y)) for y in pb) for x in pb)
    dk, _ = linalg.congruent_diagonal(gram_k)
    dp, _ = linalg.congruent_diagonal(gram_p)
    assert all(x.re < 0 for x in dk)
    assert all(x.re > 0 for x in dp)
    assert all(alg.invariant_form(x, y) == 0 for x in kb[:5] for y in pb[:5])


def test_z_spans_center_of_k():
    # the H-element direction is central in k and no k-complement direction is
    alg = tkk_algebra("sp3")
    kb = alg.k_basis()
    z = alg.h_element()
    rows = []
    for x in kb:
        row = []
        for y in kb:
            row.extend(alg.coords_in_basis(alg.bracket(x, y)))
        rows.append(tuple(Scalar(v) for v in row))
    ker = linalg.kernel_basis(linalg.transpose(linalg.mat(rows)))
    assert len(ker) == 1
    zc = tuple(Scalar(v) for v in
               [Fraction(c) for c in _k_coords(alg, z)])
    lam = None
    for a, b in zip(ker[0], zc):
        if not b.is_zero():
            lam = a / b
            break
    assert lam is not None
    assert all(a == lam * b for a, b in zip(ker[0], zc))


def _k_coords(alg, elt):
    # coordinates of a k-element in the k-basis: (plus part, D part)
    full = alg.coords_in_basis(elt)
    nj, ns = alg.space.dim, alg.str_dim
    plus = full[:nj]
    mids = full[nj:nj + ns]
    d_part = [c for c, op in zip(mids, alg.str_basis) if op.kind == "D"]
    return list(plus) + d_part


def test_gram_matrix_consistency():
    alg = tkk_algebra("u33")
    rng = random.Random(8)
    g = alg.gram_matrix()
    basis = alg.basis()
    for _ in range(10):
        i, j = rng.randrange(alg.dim), rng.randrange(alg.dim)
        assert g[i][j] == alg.invariant_form(basis[i], basis[j])


def test_json_round_trip():
    alg = tkk_algebra("sp3")
    rng = random.Random(9)
    a = rand_tkk(alg, rng)
    assert TKKElement.from_json(a.to_json()) == a
