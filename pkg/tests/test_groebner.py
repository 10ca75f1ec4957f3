import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from oideal import Field, Ideal, PolyRing, colon, intersect
from oideal.errors import InputError, ResourceLimitError
from oideal.groebner import dim_quotient, grade_of_ideal, hilbert_function, normal_form
from oideal.limits import limits_scope

from strategies import FP3, QQ3, homogeneous, ideal_gens

R = PolyRing(["x", "y"])
x, y = R.gens()
S = PolyRing(["x", "y", "z"])
X, Y, Z = S.gens()
T = PolyRing(["x0", "x1", "x2", "x3"])
x0, x1, x2, x3 = T.gens()
CUBIC = [x0 * x2 - x1 ** 2, x1 * x3 - x2 ** 2, x0 * x3 - x1 * x2]


def test_gb_examples():
    assert set(Ideal(R, [x * x, x * y]).gb()) == {x * x, x * y}
    assert list(Ideal(PolyRing(["x"]), [PolyRing(["x"]).var(0)]).gb()) == [PolyRing(["x"]).var(0)]


def test_twisted_cubic_gb_against_oracle():
    G = Ideal(T, CUBIC).gb()
    assert len(G) == 3
    for D in range(4):
        assert oracles.dim_piece(T, list(G), D) == oracles.dim_piece(T, CUBIC, D)


def test_normal_form_examples():
    G = Ideal(R, [x * x, x * y]).gb()
    assert not normal_form(x * x * y ** 3, G)
    assert normal_form(y ** 3, G) == y ** 3


def test_colon_examples():
    assert colon(Ideal(R, [x * x]), Ideal(R, [x])) == Ideal(R, [x])
    assert colon(Ideal(R, [x * y]), Ideal(R, [x])) == Ideal(R, [y])
    K = colon(Ideal(R, [x * x, x * y]), Ideal(R, [x]))
    assert K == Ideal(R, [x, y])
    for D in range(4):
        assert oracles.colon_dim(R, [x * x, x * y], [x], D) == oracles.dim_piece(R, K.generators, D)


def test_intersect_examples():
    assert intersect(Ideal(R, [x]), Ideal(R, [y])) == Ideal(R, [x * y])
    assert intersect(Ideal(R, [x, y]), Ideal(R, [x, y])) == Ideal(R, [x, y])
    N = intersect(Ideal(R, [x * x, x * y]), Ideal(R, [y]))
    assert N == Ideal(R, [x * y])
    for D in range(4):
        assert oracles.intersection_dim(R, [x * x, x * y], [y], D) == oracles.dim_piece(R, N.generators, D)


def test_dimension_and_grade():
    assert dim_quotient(Ideal(S, [X, Y])) == 1
    assert dim_quotient(Ideal(R, [x * x, x * y])) == 1
    assert dim_quotient(Ideal(T, CUBIC)) == 2
    assert grade_of_ideal(Ideal(S, [X, Y])) == 2
    assert grade_of_ideal(Ideal(R, [x * x, x * y])) == 1
    assert grade_of_ideal(Ideal(S, [X * X, Y * Y, Z * Z])) == 3


def test_twisted_cubic_hilbert_polynomial():
    # R/P has Hilbert function 3t + 1, a degree-one polynomial: dimension 2 projectively 1
    I = Ideal(T, CUBIC)
    assert [hilbert_function(I, t) for t in range(6)] == [3 * t + 1 for t in range(6)]


def test_hilbert_function_examples():
    assert hilbert_function(Ideal(R, [x, y]), 0) == 1
    assert hilbert_function(Ideal(R, [x, y]), 1) == 0
    assert hilbert_function(Ideal(R, [x * x, x * y]), 2) == 1
    assert hilbert_function(Ideal(R, []), 3) == 4


def test_rejects_non_homogeneous():
    with pytest.raises(InputError):
        Ideal(R, [x + 1])


def test_degree_cap_is_a_resource_limit():
    with limits_scope(degree_cap=2):
        with pytest.raises(ResourceLimitError):
            Ideal(T, [x0 ** 3 + x1 ** 3, x1 ** 3 + x2 ** 3, x0 * x2 ** 2 - x3 ** 3]).gb()


@given(ideal_gens(QQ3), st.randoms(use_true_random=False))
def test_gb_independent_of_generator_order(gens, rnd):
    perm = list(gens)
    rnd.shuffle(perm)
    assert Ideal(QQ3, gens).gb() == Ideal(QQ3, perm).gb()


@given(ideal_gens(FP3), homogeneous(FP3, max_degree=4))
def test_membership_matches_oracle(gens, f):
    I = Ideal(FP3, gens)
    assert I.contains(f) == oracles.member(FP3, gens, f)
    nf = I.gb().normal_form(f)
    assert I.contains(f - nf)


@given(ideal_gens(QQ3, max_gens=2, max_degree=2), ideal_gens(QQ3, max_gens=2, max_degree=2))
def test_colon_and_intersection_sound(a, b):
    I, J = Ideal(QQ3, a), Ideal(QQ3, b)
    K = colon(I, J)
    for g in K.generators:
        assert all(I.contains(g * j) for j in b)
    N = intersect(I, J)
    for g in N.generators:
        assert I.contains(g) and J.contains(g)
    for D in range(5):
        assert oracles.dim_piece(QQ3, N.generators, D) == oracles.intersection_dim(QQ3, a, b, D)
        assert oracles.dim_piece(QQ3, K.generators, D) == oracles.colon_dim(QQ3, a, b, D)


@given(ideal_gens(FP3))
def test_dim_plus_grade(gens):
    I = Ideal(FP3, gens)
    if I.is_proper():
        assert dim_quotient(I) + grade_of_ideal(I) == FP3.n


@given(ideal_gens(QQ3, max_gens=2, max_degree=2), ideal_gens(QQ3, max_gens=2, max_degree=2))
def test_hilbert_inclusion_exclusion(a, b):
    I, J = Ideal(QQ3, a), Ideal(QQ3, b)
    N, Sm = intersect(I, J), I + J
    for t in range(6):
        assert hilbert_function(N, t) + hilbert_function(Sm, t) == hilbert_function(I, t) + hilbert_function(J, t)


def test_seeded_random_membership():
    rng = random.Random(7)
    P = PolyRing(["x", "y", "z"], Field(32003))
    gens = [P.var(0) ** 2 + 3 * P.var(1) * P.var(2), P.var(1) ** 2 - P.var(0) * P.var(2)]
    I = Ideal(P, gens)
    for _ in range(20):
        f = sum((P.monomial(m, rng.randint(0, 5)) for m in [(3, 0, 0), (0, 3, 0), (1, 1, 1), (2, 1, 0)]), P.zero())
        assert I.contains(f) == oracles.member(P, gens, f)
