import pytest
from hypothesis import given

from oideal import Field, Ideal, PolyRing
from oideal.errors import InputError
from oideal.homalg import koszul_complex, lift_chain_map, mapping_cone
from oideal.modsyz import FreeModule, GradedMap, Presentation
from oideal.resolution import (
    Complex, betti_table, certify_resolution, minimal_free_resolution, minimalize, nonminimal_resolution,
    quotient_ring_resolution, tor_ranks_from_nonminimal,
)

from strategies import FP3, ideal_gens

R = PolyRing(["x", "y"])
x, y = R.gens()
S = PolyRing(["x", "y", "z"])
X, Y, Z = S.gens()
T = PolyRing(["a", "b", "c", "d"])
a, b, c, d = T.gens()
CUBIC = Ideal(T, [a * c - b * b, b * d - c * c, a * d - b * c])


def mfr(I):
    return minimal_free_resolution(Presentation.cyclic(I))


def test_koszul_betti():
    res = mfr(Ideal(S, [X, Y, Z]))
    assert res.ranks() == [1, 3, 3, 1]
    bt = betti_table(res)
    assert [bt[(i, i)] for i in range(4)] == [1, 3, 3, 1]
    assert certify_resolution(res).ok


def test_x2_xy():
    res = mfr(Ideal(R, [x * x, x * y]))
    assert res.ranks() == [1, 2, 1]
    assert res.module(1).degrees == (2, 2) and res.module(2).degrees == (3,)
    assert certify_resolution(res).ok


def test_twisted_cubic():
    res = mfr(CUBIC)
    assert res.ranks() == [1, 3, 2] and res.length == 2
    bt = betti_table(res)
    assert bt[(1, 2)] == 3 and bt[(2, 3)] == 2
    assert certify_resolution(res).ok


def test_minimalize_examples():
    res = mfr(CUBIC)
    assert minimalize(res).ranks() == res.ranks()
    # Koszul(x) plus the trivial complex R --1--> R
    F1, F0 = FreeModule((1, 0)), FreeModule((0, 0))
    d = GradedMap(R, F1, F0, [[x, R.zero()], [R.zero(), R.one()]])
    C = Complex(R, [F0, F1], [d])
    m = minimalize(C)
    assert m.ranks() == [1, 1] and m.maps[0].entries == ((x,),)


def test_cone_of_identity_is_contractible():
    K = koszul_complex([X, Y])
    L = lift_chain_map(GradedMap.identity(S, K.module(0)), K, K)
    assert minimalize(mapping_cone(L)).ranks() in ([0], [])


def test_betti_table_rejects_nonminimal():
    nm = nonminimal_resolution(Presentation.cyclic(CUBIC), 3)
    if not nm.is_minimal():
        with pytest.raises(InputError):
            betti_table(nm)


def test_three_way_tor_consistency_on_cubic():
    res = mfr(CUBIC)
    nm = nonminimal_resolution(Presentation.cyclic(CUBIC), 3)
    tor = tor_ranks_from_nonminimal(nm)
    assert sorted(tor.items()) == sorted(((i, j), v) for (i, j), v in betti_table(res).entries.items())


def test_dual_numbers():
    J = Ideal(PolyRing(["x"]), [PolyRing(["x"]).var(0) ** 2])
    xx = J.ring.var(0)
    res = quotient_ring_resolution(J, Presentation.cyclic(Ideal(J.ring, [xx])), 3)
    assert res.ranks() == [1, 1, 1, 1]
    assert all(m.entries in (((xx,),), ((-xx,),)) for m in res.maps)


def test_free_module_over_quotient():
    J = Ideal(T, [a * d - b * c])
    res = quotient_ring_resolution(J, Presentation.free(T, FreeModule((0, 0))), 3)
    assert res.ranks() == [2]


def test_segre_quotient_periodic():
    J = Ideal(T, [a * d - b * c])
    # S/(a, b): a and b are not a regular sequence on S, the resolution is periodic
    res = quotient_ring_resolution(J, Presentation.cyclic(Ideal(T, [a, b])), 4)
    assert res.ranks() == [1, 2, 2, 2, 2]
    # S/(a, d): a, d is S-regular, so the Koszul complex resolves it
    res2 = quotient_ring_resolution(J, Presentation.cyclic(Ideal(T, [a, d])), 3)
    assert res2.ranks() == [1, 2, 1]


def test_max_len_default_terminates():
    res = mfr(Ideal(S, [X * X, Y * Y, Z * Z, X * Y * Z]))
    assert res.complete and res.length <= S.n


@given(ideal_gens(FP3, max_gens=4, max_degree=3))
def test_random_resolutions_certify(gens):
    I = Ideal(FP3, gens)
    if not I.is_proper():
        return
    res = mfr(I)
    cert = certify_resolution(res)
    assert cert.ok, cert.details
    nm = nonminimal_resolution(Presentation.cyclic(I), res.length + 1)
    tor = tor_ranks_from_nonminimal(nm)
    assert {k: v for k, v in tor.items() if v} == betti_table(res).entries
    assert minimalize(nm).ranks() == res.ranks()


@given(ideal_gens(FP3, max_gens=3, max_degree=2))
def test_koszul_on_regular_sequence_is_exact(gens):
    from oideal.groebner import grade_of_ideal

    I = Ideal(FP3, gens)
    if not I.is_proper() or grade_of_ideal(I) != len(gens):
        return
    K = koszul_complex(gens)
    assert K.is_complex()
    from oideal.resolution import Resolution

    res = Resolution(FP3, K.modules, K.maps, augmentation=Presentation.cyclic(I), complete=True)
    cert = certify_resolution(res)
    assert cert.composites_zero and cert.kernel_in_image and cert.hilbert_ok
