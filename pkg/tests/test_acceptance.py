"""The ten acceptance criteria, one test each.  Every test prints a single
``ACCEPTANCE <n> PASS|FAIL`` line (visible in ``pytest -v`` output)."""

from __future__ import annotations

import io
import json
import random
import time
from contextlib import redirect_stdout

import pytest

import oracles
from oideal import Field, Ideal, PolyRing, colon, intersect
from oideal import conjectures as cj
from oideal.algebra import monomials_of_degree
from oideal.cli import main as cli_main
from oideal.homalg import ModuleMap
from oideal.instance import corpus_files, load_instance
from oideal.modsyz import GradedMap, Presentation, syzygies

CORPUS = [load_instance(p) for p in corpus_files()]
PRIMES = {"twisted_cubic:P", "segre:Q", "segre:L", "quartic:P", "points:F", "points:M", "points:H"}


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def corpus_ideals():
    for spec in CORPUS:
        for name, I in spec.ideals.items():
            if not I.is_zero() and I.is_proper():
                yield f"{spec.instance_id}:{name}", I


def corpus_modules():
    for spec in CORPUS:
        for name, I in spec.ideals.items():
            if I.is_proper():
                yield f"{spec.instance_id}:{name}", Presentation.cyclic(I)
        for name, M in spec.modules.items():
            yield f"{spec.instance_id}:{name}", M


def test_criterion_1_resolution_suite(verdict):
    bad, slowest, start = [], 0.0, time.perf_counter()
    count = 0
    for iid, M in corpus_modules():
        t = time.perf_counter()
        rep = cj.resolution_report(M, instance_id=iid)
        slowest = max(slowest, time.perf_counter() - t)
        count += 1
        if not (rep.verdict and rep.recheck()):
            bad.append(iid)
    total = time.perf_counter() - start
    ok = not bad and slowest < 60 and total < 900
    verdict(1, ok, f"{count} modules certified, failures={bad}, slowest {slowest:.2f}s, total {total:.2f}s")


def test_criterion_2_theta_vanishing(verdict):
    bad, n_ideals, n_aci, n_maps = [], 0, 0, 0
    for iid, I in corpus_ideals():
        m = I.minimalized()
        gens = list(m.generators)
        d = cj._grade(m)
        n_ideals += 1
        n_aci += len(gens) == d + 1
        for i in range(d + 1, len(gens) + 1):
            mat, rep = cj.theta_matrix(gens, i, instance_id=iid)
            n_maps += 1
            if any(v for row in mat for v in row):
                bad.append((iid, i))
    ok = not bad and n_ideals >= 10 and n_aci >= 3
    verdict(2, ok, f"{n_ideals} ideals ({n_aci} almost complete intersections), {n_maps} maps, nonzero={bad}")


def test_criterion_3_edge_nonvanishing(verdict):
    bad, n = [], 0
    for iid, I in corpus_ideals():
        x = cj.regular_sequence_in(I, cj._grade(I), seed=0)
        edge = cj.edge_nonzero(I, x=x, instance_id=iid)
        Om, _ = cj.canonical_module(I)
        syz = cj.free_summand_of_syzygy(Om, cj._grade(I))
        n += 1
        if not (edge.verdict and edge.witness["agreement"] and syz.verdict == edge.verdict):
            bad.append(iid)
    verdict(3, not bad, f"{n} instances, edge map nonzero and detectors agree; failures={bad}")


def test_criterion_4_order_ideal_grades(verdict):
    bad, n_gen = [], 0
    for iid, M in corpus_modules():
        rep = cj.order_ideal_report(M, instance_id=iid)
        n_gen += len(rep.witness["entries"])
        if not rep.verdict:
            bad.append(iid)
    verdict(4, not bad, f"{n_gen} syzygy generators checked; failures={bad}")


def _monomial_pairs():
    for spec in CORPUS:
        for chk in spec.checks:
            if chk["op"] == "monomial":
                j = next(a for a in chk["args"] if a in spec.ideals)
                s = next(a for a in chk["args"] if a in spec.sops)
                yield f"{spec.instance_id}:{j}/{s}", spec.ideals[j], spec.sops[s]


def test_criterion_5_monomial(verdict):
    bad, seen = [], []
    for iid, J, sop in _monomial_pairs():
        seen.append(iid)
        for t in (1, 2, 3):
            if not cj.monomial_test(J, sop, t).verdict:
                bad.append((iid, t))
    R = PolyRing(["a", "b", "c", "d"])
    a, b, c, d = R.gens()
    segre = all(cj.monomial_test(Ideal(R, [a * d - b * c]), [a, d, b + c], t).verdict for t in (1, 2, 3))
    ok = not bad and len(seen) >= 5 and segre and "segre:Q/s" in seen
    verdict(5, ok, f"{len(seen)} quotient rings x t in 1..3; segre (a, d, b+c) {segre}; failures={bad}")


def test_criterion_6_implications(verdict):
    bad = []
    for iid, I in corpus_ideals():
        for rep in (cj.free_summand_implication(I, instance_id=iid), cj.small_canonical_implication(I, instance_id=iid)):
            if not rep.verdict:
                bad.append((rep.claim_id, iid))
    tc = dict(corpus_ideals())["twisted_cubic:P"]
    w = cj.small_canonical_implication(tc).witness
    exercised = w["nu"] == 2 and w["s4"] is True and w["hypotheses"] and w["conclusion"]
    verdict(6, not bad and exercised,
            f"never falsified (failures={bad}); twisted cubic nu={w['nu']}, S4={w['s4']}, conclusion={w['conclusion']}")


def test_criterion_7_aci_companion(verdict):
    ideals = dict(corpus_ideals())
    bad, done = [], 0
    for iid in sorted(PRIMES):
        I = ideals[iid]
        _, _, rep = cj.aci_companion(I, seed=0, instance_id=iid)
        done += 1
        w = rep.witness
        if not (rep.verdict and w["hf_prime"] == w["hf_aci"] and w["nu_prime"] == w["nu_aci"]):
            bad.append(iid)
    verdict(7, not bad and done >= 3, f"{done} primes, Hilbert function and nu of Omega match; failures={bad}")


def _random_ideal(rng, ring, k, maxdeg):
    gens = []
    for _ in range(k):
        deg = rng.randint(1, maxdeg)
        mons = monomials_of_degree(ring.n, deg)
        f = ring.zero()
        for m in rng.sample(mons, min(len(mons), rng.randint(1, 3))):
            f = f + ring.monomial(m, rng.randint(-5, 5) or 1)
        gens.append(f if f else ring.var(0) ** deg)
    return gens


def _probe(rng, R, gens, D):
    """A degree-D element: half the time a combination of the generators."""
    mons = monomials_of_degree(R.n, D)
    f = R.zero()
    for m in rng.sample(mons, min(len(mons), 2)):
        f = f + R.monomial(m, rng.randint(1, 5))
    if rng.random() < 0.5:
        f = R.zero()
        for g in gens:
            if g.degree() <= D:
                m = rng.choice(monomials_of_degree(R.n, D - g.degree()))
                f = f + R.monomial(m, rng.randint(1, 5)) * g
    return f


def test_criterion_8_oracle_equivalence(verdict):
    rng = random.Random(20260)
    rings = [PolyRing(["x", "y", "z"], Field(0)), PolyRing(["x", "y", "z"], Field(32003)),
             PolyRing(["x", "y"], Field(7))]
    bad, n, members = [], 0, 0
    for k in range(60):
        R = rings[k % len(rings)]
        A = _random_ideal(rng, R, rng.randint(1, 3), 2)
        B = _random_ideal(rng, R, rng.randint(1, 2), 2)
        I, J = Ideal(R, A), Ideal(R, B)
        K, N = colon(I, J), intersect(I, J)
        row = GradedMap(R, tuple(f.degree() for f in A), (0,), [A])
        Z = syzygies(row)
        for D in range(7):
            probe = _probe(rng, R, A, D)
            inside = I.contains(probe)
            members += inside
            ok = inside == oracles.member(R, A, probe)
            ok &= oracles.dim_piece(R, K.generators, D) == oracles.colon_dim(R, A, B, D)
            ok &= oracles.dim_piece(R, N.generators, D) == oracles.intersection_dim(R, A, B, D)
            ok &= oracles.module_piece_dim(R, Z.columns(), Z.source.degrees, row.source.degrees, D) == \
                oracles.kernel_dim(R, row.columns(), (0,), row.source.degrees, D)
            if not ok:
                bad.append((k, D))
        n += 1
    verdict(8, not bad and n >= 50 and members > 0,
            f"{n} seeded inputs, degrees 0..6, {members} member probes, membership/colon/intersection/kernel; "
            f"mismatches={bad}")


def _fuzz_json():
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["fuzz", "--seed", "1", "--count", "100", "--json"])
    return code, buf.getvalue()


def test_criterion_9_fuzz(verdict):
    code1, first = _fuzz_json()
    code2, second = _fuzz_json()
    doc = json.loads(first)
    forced = doc["summary"]["forced_failures"]
    ok = not forced and first == second and code1 == code2 and code1 in (0, 3)
    verdict(9, ok, f"100 instances, {doc['summary']['total']} checks, forced failures={forced}, "
                   f"{doc['summary']['skipped']} skipped, byte-identical rerun={first == second}")


def test_criterion_10_lift_independence(verdict):
    bad, cases = [], 0
    for iid, I in corpus_ideals():
        R = I.ring
        M = Presentation.cyclic(I)
        T = Presentation.cyclic(Ideal(R, list(I.generators) + [R.var(0)]))
        maps = [("identity", ModuleMap.identity(M)),
                ("projection", ModuleMap(M, T, GradedMap.identity(R, M.generators))),
                ("omega", cj.omega_inclusion(I, cj.regular_sequence_in(I, cj._grade(I), seed=0)))]
        for label, f in maps:
            rep = cj.lift_independence(f, instance_id=iid, label=label)
            cases += 1
            if not rep.verdict:
                bad.append((iid, label))
    verdict(10, not bad and cases >= 10, f"{cases} (map, resolution pair) cases, strategies 0 and 1 agree; failures={bad}")
