"""Homogeneous Buchberger algorithm over encoded module vectors.

Pairs are selected by twisted degree, then by the key of their lcm (normal
strategy inside a degree), and pruned with the Gebauer-Moeller criteria.
Inputs are interleaved with the pair queue by degree, which lets the same
loop report which inputs are minimal generators of the submodule they span.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import le

from . import kernel
from .errors import ResourceLimitError
from .limits import Limits, get_limits


def make_store(order, p: int):
    return kernel.make_store(order, p)


def vector_degree(order, keys) -> int:
    return order.degree(keys[0])


@dataclass
class GBResult:
    order: object
    p: int
    basis: list                       # reduced GB, list of (keys, coeffs)
    minimal_inputs: list = field(default_factory=list)
    store: object = None              # store holding exactly ``basis`` when requested

    def lead_terms(self):
        return [self.order.decode(k[0]) for k, _ in self.basis]


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a, b):
    return all(map(le, a, b))


def buchberger(
    vectors,
    order,
    p: int,
    *,
    limits: Limits | None = None,
    preseed=(),
    track_minimal: bool = False,
    reduced: bool = True,
    keep_store: bool = False,
    strategy: int = 0,
) -> GBResult:
    """Groebner basis of the submodule generated by ``preseed + vectors``.

    With ``track_minimal`` the result lists the indices of ``vectors`` that
    were not in the span of the preseed, lower-degree inputs and earlier
    same-degree inputs.  For homogeneous input those form a minimal
    generating set modulo the preseed.
    """
    limits = limits or get_limits()
    store = make_store(order, p)
    ideal_case = order.ncomp == 1

    inputs = []
    for tag, vecs in ((0, preseed), (1, vectors)):
        for idx, (k, c) in enumerate(vecs):
            if not k:
                continue
            for key in (k[0],):
                _, e = order.decode(key)
                if sum(e) > limits.degree_cap:
                    raise ResourceLimitError(
                        f"input degree {sum(e)} exceeds degree cap {limits.degree_cap}"
                    )
            inputs.append((order.degree(k[0]), tag, idx, k, c))
    inputs.sort(key=lambda t: (t[0], t[1], t[2]))

    G: list = []           # store indices currently in the basis
    pairs: list = []       # (degree, lcm_key, i, j), kept sorted descending
    lt_comp = []
    lt_exps = []
    minimal = []
    processed = 0

    def update(h):
        nonlocal pairs, G
        hc, he = lt_comp[h], lt_exps[h]
        new = []
        for g in G:
            if lt_comp[g] == hc:
                new.append((g, _lcm(he, lt_exps[g])))
        D = []
        while new:
            g1, l1 = new.pop(0)
            coprime = ideal_case and all(
                a == 0 or b == 0 for a, b in zip(he, lt_exps[g1])
            )
            if coprime or not (
                any(_divides(l2, l1) for _, l2 in new) or any(_divides(l2, l1) for _, l2, _c in D)
            ):
                D.append((g1, l1, coprime))
        kept = []
        for deg, lk, a, b in pairs:
            if lt_comp[a] == hc:
                l_ab = _lcm(lt_exps[a], lt_exps[b])
                if (
                    _divides(he, l_ab)
                    and _lcm(lt_exps[a], he) != l_ab
                    and _lcm(lt_exps[b], he) != l_ab
                ):
                    continue
            kept.append((deg, lk, a, b))
        for g, l, coprime in D:
            if coprime:
                continue
            lk = order.encode(hc, l)
            kept.append((sum(l) + order.twists[hc], lk, g, h))
        kept.sort(reverse=True)
        pairs = kept
        G = [g for g in G if not (lt_comp[g] == hc and _divides(he, lt_exps[g]))]
        G.append(h)

    def insert(keys, coeffs):
        h = store.add(keys, coeffs)
        c, e = order.decode(keys[0])
        lt_comp.append(c)
        lt_exps.append(e)
        update(h)
        return h

    ptr = 0
    while pairs or ptr < len(inputs):
        if pairs and (ptr >= len(inputs) or pairs[-1][0] <= inputs[ptr][0]):
            deg, lk, a, b = pairs.pop()
            processed += 1
            if processed > limits.pair_cap:
                raise ResourceLimitError(f"pair count exceeds cap {limits.pair_cap}")
            _, le_ = order.decode(lk)
            if sum(le_) > limits.degree_cap:
                raise ResourceLimitError(
                    f"S-pair degree {sum(le_)} exceeds degree cap {limits.degree_cap}"
                )
            hk, hc = store.spoly_reduce(a, b, lk, True, strategy)
            if hk:
                insert(hk, hc)
        else:
            deg, tag, idx, k, c = inputs[ptr]
            ptr += 1
            hk, hc = store.reduce(list(k), list(c), True, strategy)
            if hk:
                insert(hk, hc)
                if tag == 1:
                    minimal.append(idx)
            elif tag == 1 and track_minimal:
                pass

    basis = [store.get(g) for g in G]
    if reduced:
        basis = interreduce(basis, order, p, strategy)
    basis.sort(key=lambda v: v[0][0])
    result = GBResult(order, p, basis, sorted(minimal) if track_minimal else [])
    if keep_store:
        s = make_store(order, p)
        for k, c in basis:
            s.add(k, c)
        result.store = s
    return result


def interreduce(basis, order, p, strategy: int = 0):
    """Tail-reduce a basis with pairwise non-divisible leading terms; make it monic."""
    store = make_store(order, p)
    for k, c in basis:
        store.add(k, c)
    out = []
    for i in range(len(basis)):
        store.set_active(i, False)
        k, c = store.get(i)
        rk, rc = store.reduce(k, c, True, strategy)
        store.set_active(i, True)
        if not rk:
            continue
        lc = rc[0]
        if p:
            inv = pow(lc, -1, p)
            rc = [x * inv % p for x in rc]
        else:
            rc = [x / lc for x in rc]
        out.append((rk, rc))
    return out


def normal_form(vec, gb: GBResult, strategy: int = 0):
    store = gb.store
    if store is None:
        store = make_store(gb.order, gb.p)
        for k, c in gb.basis:
            store.add(k, c)
        gb.store = store
    k, c = vec
    if not k:
        return [], []
    return store.reduce(list(k), list(c), True, strategy)
