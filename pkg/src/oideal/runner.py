"""Dispatch of CLI commands onto the checks of an instance.

Work is split into independent tasks ``(op, target)`` so that ``--jobs``
can run them in worker processes; results are merged and sorted, so the
output does not depend on scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import conjectures as cj
from .errors import InputError, ResourceLimitError, SearchExhaustedError
from .groebner import Ideal
from .homalg import ModuleMap
from .limits import Limits, limits_scope
from .modsyz import GradedMap, Presentation

COMMANDS = (
    "resolve", "betti", "ext", "canonical", "theta", "order-ideals", "free-summand", "edge",
    "monomial", "aci", "serre", "unmixed", "suite",
)

SUITE_OPS = ("resolve", "ext", "order-ideals", "theta", "canonical", "edge", "aci", "implications",
             "lifts", "monomial", "cm-order-ideal")


@dataclass
class Options:
    seed: int = 0
    t_values: tuple = (1, 2, 3)
    t_override: bool = False
    max_len: int | None = None
    jobs: int = 1
    limits: Limits = field(default_factory=Limits)


@dataclass
class Outcome:
    reports: list = field(default_factory=list)
    skipped: list = field(default_factory=list)


def _iid(spec, name):
    return f"{spec.instance_id}:{name}"


def _usable_ideals(spec):
    """Proper nonzero ideals, and the improper ones with a reason.  The zero
    ideal is neither: R/(0) is only used as a module and a monomial quotient."""
    out, bad = [], []
    for name, I in spec.ideals.items():
        if I.is_zero():
            continue
        if not I.is_proper():
            bad.append((name, "improper ideal (unit ideal)"))
        else:
            out.append(name)
    return out, bad


def _modules(spec):
    names = [n for n, I in spec.ideals.items() if I.is_proper()]
    return [("ideal", n) for n in names] + [("module", n) for n in spec.modules]


def _module_of(spec, kind, name):
    return Presentation.cyclic(spec.ideals[name]) if kind == "ideal" else spec.modules[name]


def _regseq_for(spec, name, opts):
    """A declared regular-sequence hint named in a directive, else a seeded search."""
    I = spec.ideals[name]
    for chk in spec.checks:
        if chk["op"] in ("canonical", "edge", "aci", "suite") and chk["args"][:1] == [name]:
            for a in chk["args"][1:]:
                if a in spec.regseqs:
                    return spec.regseqs[a]
    d = cj._grade(I)
    return cj.regular_sequence_in(I, d, opts.seed)


def _monomial_pairs(spec):
    pairs = []
    for chk in spec.checks:
        if chk["op"] == "monomial":
            js = [a for a in chk["args"] if a in spec.ideals]
            ss = [a for a in chk["args"] if a in spec.sops]
            if len(js) != 1 or len(ss) != 1:
                raise InputError("check monomial needs one ideal and one sop")
            pairs.append((js[0], ss[0], tuple(chk["params"].get("t", ()))))
    if not pairs and spec.sops:
        for s in spec.sops:
            for j, J in spec.ideals.items():
                dimA = spec.ring.n if J.is_zero() else J.dim()
                if len(spec.sops[s]) == dimA and (J + Ideal(spec.ring, spec.sops[s])).dim() == 0:
                    pairs.append((j, s, ()))
    return pairs


def plan(spec, command):
    """Task list for a command."""
    ops = SUITE_OPS if command == "suite" else (command,)
    ideals, _ = _usable_ideals(spec)
    tasks = []
    for op in ops:
        if op in ("resolve", "betti", "order-ideals"):
            tasks += [(op, kind, name) for kind, name in _modules(spec)]
        elif op in ("ext", "canonical", "theta", "edge", "aci", "serre", "unmixed", "implications", "lifts",
                    "free-summand"):
            tasks += [(op, "ideal", name) for name in ideals if cj._grade(spec.ideals[name]) >= 1 or op in ("ext", "theta", "serre")]
        elif op == "monomial":
            tasks += [(op, "pair", k) for k in range(len(_monomial_pairs(spec)))]
        elif op == "cm-order-ideal":
            tasks += [(op, "directive", k) for k, c in enumerate(spec.checks) if c["op"] == "cm-order-ideal"]
    return tasks


def _run_op(spec, op, kind, key, opts):
    ring = spec.ring
    R = []
    if op in ("resolve", "betti"):
        M = _module_of(spec, kind, key)
        R.append(cj.resolution_report(M, instance_id=_iid(spec, key)))
    elif op == "order-ideals":
        M = _module_of(spec, kind, key)
        R.append(cj.order_ideal_report(M, instance_id=_iid(spec, key)))
    elif op == "ext":
        R.append(cj.ext_report(spec.ideals[key], instance_id=_iid(spec, key)))
    elif op == "theta":
        I = spec.ideals[key].minimalized()
        iid = _iid(spec, key)
        d = cj._grade(I)
        gens = list(I.generators)
        for i in range(d + 1, len(gens) + 1):
            claim = "aci-theta-vanishing" if len(gens) == d + 1 else "theta-vanishing"
            R.append(cj.theta_matrix(gens, i, instance_id=iid, claim_id=claim)[1])
        if d >= 1:
            R.append(cj.s2_theta_report(I, instance_id=iid))
    elif op == "canonical":
        I = spec.ideals[key]
        iid = _iid(spec, key)
        R.append(cj.canonical_module(I, instance_id=iid)[1])
        R.append(cj.canonical_via_colon(I, _regseq_for(spec, key, opts), instance_id=iid)[1])
    elif op in ("edge", "free-summand"):
        I = spec.ideals[key]
        iid = _iid(spec, key)
        x = _regseq_for(spec, key, opts)
        R.append(cj.edge_nonzero(I, x=x, instance_id=iid))
        R.append(cj.detector_agreement(I, x, instance_id=iid))
        d = cj._grade(I)
        Om, _ = cj.canonical_module(I)
        rep = cj.free_summand_of_syzygy(Om, d, instance_id=iid + ":omega", forced=True)
        R.append(rep)
        if op == "free-summand":
            R.append(cj.free_summand_of_syzygy(Presentation.cyclic(I), d, instance_id=iid + ":quotient"))
    elif op == "aci":
        I = spec.ideals[key]
        iid = _iid(spec, key)
        d = cj._grade(I)
        x, lam, rep = cj.aci_companion(I, opts.seed, x=_regseq_for(spec, key, opts), instance_id=iid)
        R.append(rep)
        A = Ideal(ring, list(x) + [lam])
        if A.is_minimally_generated() and len(A.generators) == d + 1:
            R.append(cj.theta_matrix(list(A.generators), d + 1, instance_id=iid + ":companion",
                                     claim_id="aci-theta-vanishing")[1])
    elif op == "serre":
        I = spec.ideals[key]
        R += [cj.serre_check(I, s, instance_id=_iid(spec, key)) for s in (1, 2, 3, 4)]
    elif op == "unmixed":
        R.append(cj.unmixed_check(spec.ideals[key], instance_id=_iid(spec, key)))
    elif op == "implications":
        I = spec.ideals[key]
        R.append(cj.free_summand_implication(I, instance_id=_iid(spec, key)))
        R.append(cj.small_canonical_implication(I, instance_id=_iid(spec, key)))
    elif op == "lifts":
        I = spec.ideals[key]
        iid = _iid(spec, key)
        M = Presentation.cyclic(I)
        R.append(cj.lift_independence(ModuleMap.identity(M), instance_id=iid, label="identity"))
        T = Presentation.cyclic(Ideal(ring, list(I.generators) + [ring.var(0)]))
        R.append(cj.lift_independence(ModuleMap(M, T, GradedMap.identity(ring, M.generators)),
                                      instance_id=iid, label=f"projection onto R/(I + {ring.variables[0]})"))
        x = _regseq_for(spec, key, opts)
        R.append(cj.lift_independence(cj.omega_inclusion(I, x), instance_id=iid, label="Omega into R/(x)"))
    elif op == "monomial":
        j, s, ts = _monomial_pairs(spec)[key]
        ts = opts.t_values if (opts.t_override or not ts) else ts
        for t in ts:
            R.append(cj.monomial_test(spec.ideals[j], spec.sops[s], t, instance_id=f"{spec.instance_id}:{j}/{s}"))
    elif op == "cm-order-ideal":
        chk = spec.checks[key]
        js = [a for a in chk["args"] if a in spec.ideals]
        ms = [a for a in chk["args"] if a in spec.modules or a in spec.ideals]
        if len(chk["args"]) != 2 or not js:
            raise InputError("check cm-order-ideal needs a quotient ideal and a module")
        J = spec.ideals[chk["args"][0]]
        tgt = chk["args"][1]
        M = spec.modules[tgt] if tgt in spec.modules else Presentation.cyclic(spec.ideals[tgt])
        ml = chk["params"].get("max_len", [opts.max_len or 3])[0]
        del ms
        R.append(cj.quotient_order_ideal_report(J, M, ml, instance_id=f"{spec.instance_id}:{chk['args'][0]}/{tgt}"))
    else:
        raise InputError(f"unknown operation {op!r}")
    return R


def run_task(spec, task, opts):
    """Run one task; resource-limit and search failures become skip records."""
    op, kind, key = task
    with limits_scope(degree_cap=opts.limits.degree_cap, pair_cap=opts.limits.pair_cap):
        try:
            reports = _run_op(spec, op, kind, key, opts)
            return [r.to_json() for r in reports], []
        except ResourceLimitError as e:
            return [], [{"instance_id": _iid(spec, key), "op": op, "kind": "resource-limit", "reason": str(e)}]
        except SearchExhaustedError as e:
            return [], [{"instance_id": _iid(spec, key), "op": op, "kind": "search-exhausted", "reason": str(e)}]


def _task_entry(args):
    spec, task, opts = args
    return run_task(spec, task, opts)


def run_command(spec, command, opts: Options) -> Outcome:
    out = Outcome()
    _, bad = _usable_ideals(spec)
    for name, why in bad:
        out.skipped.append({"instance_id": _iid(spec, name), "op": command, "kind": "input-invalid", "reason": why})
    with limits_scope(degree_cap=opts.limits.degree_cap, pair_cap=opts.limits.pair_cap):
        tasks = plan(spec, command)
    if opts.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as ex:
            results = list(ex.map(_task_entry, [(spec, t, opts) for t in tasks]))
    else:
        results = [run_task(spec, t, opts) for t in tasks]
    for reps, skips in results:
        out.reports += reps
        out.skipped += skips
    return out
