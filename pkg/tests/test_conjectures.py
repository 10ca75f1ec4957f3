import json

import pytest
from hypothesis import given, settings

from oideal import Field, Ideal, PolyRing
from oideal import conjectures as cj
from oideal.errors import InputError
from oideal.homalg import ModuleMap
from oideal.modsyz import FreeModule, GradedMap, Presentation, annihilator

from strategies import FP3, ideal_gens

R = PolyRing(["x", "y"])
x, y = R.gens()
S = PolyRing(["x", "y", "z"])
X, Y, Z = S.gens()
T = PolyRing(["a", "b", "c", "d"])
a, b, c, d = T.gens()
CUBIC = Ideal(T, [a * c - b * b, b * d - c * c, a * d - b * c])
XY = Ideal(S, [X, Y])
MAX = Ideal(S, [X, Y, Z])


def roundtrip(rep):
    """Re-run the embedded re-check on a JSON round-tripped witness."""
    again = cj.CheckReport(rep.claim_id, rep.instance_id, rep.verdict, json.loads(json.dumps(rep.witness)))
    return again.recheck() == rep.verdict


def test_order_ideals():
    rep = cj.order_ideal_report(Presentation.cyclic(MAX))
    assert rep.verdict and roundtrip(rep)
    row = [r for r in rep.witness["entries"] if r["i"] == 2]
    assert all(r["grade"] >= 2 for r in row)
    rep = cj.order_ideal_report(Presentation.cyclic(Ideal(R, [x * x, x * y])), [2])
    assert rep.verdict and rep.witness["entries"][0]["grade"] == 2
    rep = cj.order_ideal_report(Presentation.cyclic(CUBIC))
    assert rep.verdict and rep.forced


def test_theta_examples():
    mat, rep = cj.theta_matrix([x * x, x * y], 2)
    assert mat == [[0]] and rep.verdict and roundtrip(rep)
    mat, rep = cj.theta_matrix([X, Y, Z], 3)
    assert mat == [[1]] and rep.verdict and not rep.witness["vanishing_claimed"]


def test_theta_on_non_cm_aci():
    mat, rep = cj.theta_matrix([X * X, Y * Y, X * Y * Z], 3, claim_id="aci-theta-vanishing")
    assert rep.witness["height"] == 2 and len(mat) == 1
    assert rep.verdict and rep.witness["zero"]


def test_canonical_examples():
    Om, rep = cj.canonical_module(XY)
    assert Om.rank == 1 and annihilator(Om) == XY and rep.verdict
    Om, _ = cj.canonical_module(CUBIC)
    assert Om.rank == 2
    Om, _ = cj.canonical_module(MAX)
    assert Om.rank == 1 and annihilator(Om) == MAX


def test_canonical_via_colon_examples():
    Pc, rep = cj.canonical_via_colon(XY, [X, Y])
    assert rep.verdict and Pc.rank == 1 and roundtrip(rep)
    Pc, rep = cj.canonical_via_colon(Ideal(R, [x * x, x * y]), [x * x])
    assert rep.verdict and rep.witness["colon"] == ["x"]
    x_seq = cj.regular_sequence_in(CUBIC, 2, seed=3)
    _, rep = cj.canonical_via_colon(CUBIC, x_seq)
    assert rep.verdict


def test_free_summand_examples():
    M = Presentation(GradedMap(R, FreeModule((1,)), FreeModule((0, 0)), [[x], [R.zero()]]))
    rep = cj.free_summand_of_syzygy(M, 0)
    assert rep.verdict and rep.witness["coordinate"] == 1
    assert cj.free_summand_of_syzygy(Presentation.cyclic(XY), 2).verdict
    Om, _ = cj.canonical_module(CUBIC)
    assert cj.free_summand_of_syzygy(Om, 2).verdict


def test_free_summand_via_tor_examples():
    rep = cj.free_summand_via_tor(XY, [X, Y])
    assert rep.verdict and len(rep.witness["matrix"]) == 1 and rep.witness["matrix"][0][0] != "0"
    assert rep.witness["agreement"]
    assert cj.free_summand_via_tor(MAX, [X, Y, Z]).verdict
    x_seq = cj.regular_sequence_in(CUBIC, 2, seed=0)
    rep = cj.free_summand_via_tor(CUBIC, x_seq)
    assert rep.verdict and rep.witness["agreement"]


def test_edge_examples():
    for I in (XY, MAX, CUBIC, Ideal(S, [X * X, Y * Y, X * Y * Z])):
        rep = cj.edge_nonzero(I, seed=1)
        assert rep.verdict and rep.witness["agreement"] and roundtrip(rep)


def test_monomial_examples():
    assert cj.monomial_test(Ideal(R, []), [x, y], 1).verdict
    J = Ideal(T, [a * d - b * c])
    for t in (1, 2, 3):
        rep = cj.monomial_test(J, [a, d, b + c], t)
        assert rep.verdict and roundtrip(rep)
    with pytest.raises(InputError):
        cj.monomial_test(J, [a, d], 1)


def test_monomial_oracle_degree_three():
    # (b+c)ad is not in J + (a^2, d^2, (b+c)^2) in degree 3: brute-force check
    import oracles

    J = [a * d - b * c, a * a, d * d, (b + c) ** 2]
    assert not oracles.member(T, J, a * d * (b + c))


def test_regular_sequence_examples():
    seq = cj.regular_sequence_in(MAX, 2, seed=5)
    assert len(seq) == 2 and all(f.degree() == 1 for f in seq)
    seq = cj.regular_sequence_in(Ideal(R, [x * x, x * y]), 1, seed=0)
    assert len(seq) == 1 and Ideal(R, [x * x, x * y]).contains(seq[0])
    seq = cj.regular_sequence_in(CUBIC, 2, seed=2)
    from oideal.groebner import grade_of_ideal

    assert grade_of_ideal(Ideal(T, seq)) == 2


def test_aci_companion_examples():
    x_seq, lam, rep = cj.aci_companion(XY, x=[X, Y])
    assert rep.verdict and XY.contains(lam)
    x_seq, lam, rep = cj.aci_companion(CUBIC, seed=4)
    assert rep.verdict and rep.witness["nu_prime"] == rep.witness["nu_aci"] == 2 and roundtrip(rep)
    P = Ideal(R, [x])
    _, lam, rep = cj.aci_companion(P, x=[x])
    assert lam == x and rep.verdict


def test_unmixed_examples():
    assert cj.unmixed_check(XY).verdict
    rep = cj.unmixed_check(Ideal(R, [x * x, x * y]))
    assert not rep.verdict and rep.witness["hull"] == ["x"] and not rep.forced
    rep = cj.unmixed_check(Ideal(S, [X * Y, X * Z]))
    assert not rep.verdict and rep.witness["hull"] == ["x"]


def test_serre_examples():
    assert all(cj.serre_check(XY, s).verdict for s in (1, 2, 3, 4))
    assert cj.serre_check(CUBIC, 4).verdict
    rep = cj.serre_check(Ideal(R, [x * x, x * y]), 1)
    assert not rep.verdict
    assert rep.witness["ext_dims"] == [{"i": 2, "dim": 0, "bound": -1}]


def test_implications():
    rep = cj.free_summand_implication(XY)
    assert rep.witness["antecedent"] and rep.witness["consequent"] and rep.verdict
    rep = cj.free_summand_implication(CUBIC)
    assert rep.verdict and rep.witness["applicable"]
    rep = cj.small_canonical_implication(CUBIC)
    assert rep.verdict and rep.witness["nu"] == 2 and rep.witness["s4"] and rep.witness["conclusion"]
    rep = cj.small_canonical_implication(XY)
    assert rep.verdict and rep.witness["nu"] == 1 and rep.witness["s3"] and rep.witness["hypotheses"]


def test_s2_theta():
    rep = cj.s2_theta_report(CUBIC)
    assert rep.verdict and rep.witness["applicable"] and rep.witness["zero"]
    rep = cj.s2_theta_report(XY)
    assert rep.verdict and not rep.witness["applicable"]


def test_lift_independence_and_ext_report():
    rep = cj.lift_independence(ModuleMap.identity(Presentation.cyclic(CUBIC)), label="identity")
    assert rep.verdict and roundtrip(rep)
    rep = cj.ext_report(CUBIC)
    assert rep.verdict and roundtrip(rep)


def test_cm_quotient_order_ideals():
    J = Ideal(T, [a * d - b * c])
    rep = cj.quotient_order_ideal_report(J, Presentation.cyclic(Ideal(T, [a, b])), 3)
    assert rep.verdict and roundtrip(rep)
    with pytest.raises(InputError):
        cj.quotient_order_ideal_report(Ideal(R, [x * x, x * y]), Presentation.cyclic(Ideal(R, [x])), 2)


def test_recheck_detects_tampering():
    rep = cj.resolution_report(Presentation.cyclic(CUBIC))
    w = json.loads(json.dumps(rep.witness))
    w["tor_identity_sizes"][1] += 1
    assert not cj.RECHECKS["resolution-suite"](w)


def test_witness_carries_ring_and_proxy():
    rep = cj.edge_nonzero(XY)
    assert rep.witness["proxy"] == "graded-local proxy"
    assert cj.ring_from_descriptor(rep.witness["ring"]) == S


@settings(max_examples=15)
@given(ideal_gens(FP3, max_gens=3, max_degree=2))
def test_forced_claims_on_random_ideals(gens):
    I = Ideal(FP3, gens)
    if not I.is_proper():
        return
    reports = [cj.resolution_report(Presentation.cyclic(I)), cj.order_ideal_report(Presentation.cyclic(I)),
               cj.ext_report(I), cj.edge_nonzero(I, seed=0)]
    m = I.minimalized()
    dd = cj._grade(m)
    for i in range(dd + 1, len(m.generators) + 1):
        reports.append(cj.theta_matrix(list(m.generators), i)[1])
    for rep in reports:
        assert rep.verdict, rep.claim_id
        assert rep.recheck()
    agree = cj.detector_agreement(I, cj.regular_sequence_in(I, dd, seed=0))
    assert agree.verdict
