"""Conversions between polynomial columns and encoded vectors, plus the
elimination-order kernel and lift machinery shared by ideals and modules.

A column is a list of :class:`Polynomial` entries, one per row of the target
free module.  Column ``j`` of a map has twisted degree ``col_twists[j]``.
"""

from __future__ import annotations

from ._engine import buchberger, normal_form
from ._order import ModuleOrder
from .algebra import Polynomial, PolyRing
from .limits import get_limits


def column_to_vector(col, order: ModuleOrder, comp_offset: int = 0):
    pairs = []
    enc = order.encode
    for r, f in enumerate(col):
        c = comp_offset + r
        for e, v in f._d.items():
            pairs.append((enc(c, e), v))
    pairs.sort(reverse=True, key=lambda t: t[0])
    return [k for k, _ in pairs], [v for _, v in pairs]


def vector_to_column(keys, coeffs, order: ModuleOrder, ring: PolyRing, start: int, stop: int):
    rows = [dict() for _ in range(stop - start)]
    dec = order.decode
    for k, v in zip(keys, coeffs):
        c, e = dec(k)
        if start <= c < stop:
            rows[c - start][e] = v
    return [Polynomial(ring, d) for d in rows]


def negate_column(col):
    return [-f for f in col]


def _order(ring, twists, upper=None):
    return ModuleOrder(ring.n, twists, upper, get_limits().degree_cap)


def kernel_columns(ring: PolyRing, columns, row_twists, col_twists, *, minimal: bool = True):
    """Generators of the kernel of the map whose columns are ``columns``.

    Returns ``(kernel_columns, kernel_twists)``; the kernel lives in the source
    free module with twists ``col_twists``.  With ``minimal`` the generators
    form a minimal generating set (graded Nakayama).
    """
    m, k = len(row_twists), len(col_twists)
    if k == 0:
        return [], []
    if m == 0:
        ident = [[ring.one() if r == j else ring.zero() for r in range(k)] for j in range(k)]
        return ident, list(col_twists)
    order = _order(ring, list(row_twists) + list(col_twists), upper=m)
    p = ring.characteristic
    vecs = []
    for j, col in enumerate(columns):
        unit = [ring.zero()] * k
        unit[j] = ring.one()
        vecs.append(column_to_vector(list(col) + unit, order))
    gb = buchberger(vecs, order, p)
    ker = []
    for keys, coeffs in gb.basis:
        if order.in_upper(keys[0]):
            continue
        ker.append(vector_to_column(keys, coeffs, order, ring, m, m + k))
    twists = [vector_twist(col, col_twists) for col in ker]
    if minimal and ker:
        keep = minimal_subset(ring, ker, col_twists, twists)
        ker = [ker[i] for i in keep]
        twists = [twists[i] for i in keep]
    return ker, twists


def vector_twist(col, twists):
    for r, f in enumerate(col):
        if f:
            return f.degree() + twists[r]
    raise ValueError("zero vector has no degree")


def minimal_subset(ring, columns, row_twists, col_twists=None, preseed=()):
    """Indices of a minimal generating subset of the span of ``columns``,
    modulo the span of ``preseed`` columns."""
    if not columns:
        return []
    order = _order(ring, row_twists)
    vecs = [column_to_vector(c, order) for c in columns]
    pre = [column_to_vector(c, order) for c in preseed]
    gb = buchberger(vecs, order, ring.characteristic, preseed=pre, track_minimal=True, reduced=False)
    return gb.minimal_inputs


class Lifter:
    """Solves ``M w = v`` for columns ``v`` using one elimination GB of the
    graph of ``M``.  ``strategy`` 1 reverses source and target bases, which
    changes the module order and therefore the particular preimage returned."""

    def __init__(self, ring, columns, row_twists, col_twists, strategy: int = 0):
        self.ring = ring
        self.m = len(row_twists)
        self.k = len(col_twists)
        self.strategy = strategy
        columns = [list(c) for c in columns]
        row_twists = list(row_twists)
        col_twists = list(col_twists)
        if strategy == 1:
            columns = [c[::-1] for c in columns[::-1]]
            row_twists = row_twists[::-1]
            col_twists = col_twists[::-1]
        self.order = _order(ring, row_twists + col_twists, upper=self.m)
        vecs = []
        for j, col in enumerate(columns):
            unit = [ring.zero()] * self.k
            unit[j] = ring.one()
            vecs.append(column_to_vector(col + unit, self.order))
        self.gb = buchberger(vecs, self.order, ring.characteristic, keep_store=True, strategy=strategy)

    def lift(self, v):
        """Return ``w`` with ``M w = v`` or ``None`` when ``v`` is not in the image."""
        ring = self.ring
        v = list(v)
        if self.strategy == 1:
            v = v[::-1]
        if self.k == 0:
            return [] if all(not f for f in v) else None
        if self.m == 0:
            return [ring.zero()] * self.k
        vec = column_to_vector(v + [ring.zero()] * self.k, self.order)
        rk, rc = normal_form(vec, self.gb, self.strategy)
        if rk and self.order.in_upper(rk[0]):
            return None
        w = vector_to_column(rk, rc, self.order, ring, self.m, self.m + self.k)
        w = negate_column(w)
        if self.strategy == 1:
            w = w[::-1]
        return w
