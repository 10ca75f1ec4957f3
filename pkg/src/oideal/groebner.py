"""Ideals of k[x_1..x_n]: reduced Groebner bases, normal forms, ideal arithmetic
and the dimension / grade / Hilbert function invariants."""

from __future__ import annotations

from itertools import combinations

from ._engine import buchberger as _buchberger
from ._engine import normal_form as _nf
from ._order import ModuleOrder
from ._vectors import column_to_vector, kernel_columns, minimal_subset, vector_to_column
from .algebra import Polynomial, PolyRing, monomials_of_degree
from .errors import InputError
from .limits import get_limits

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "colon",
    "intersect",
    "dim_quotient",
    "grade_of_ideal",
    "hilbert_function",
    "GRADE_JUSTIFICATION",
]

GRADE_JUSTIFICATION = (
    "grade = height = n - dim(R/I), valid because R = k[x_1..x_n] is regular (Cohen-Macaulay)"
)


class UnitIdealError(InputError):
    """The ideal is the whole ring; dimension and grade are undefined."""


def _check_homogeneous(f: Polynomial, what="generator"):
    ok, _ = f.is_homogeneous()
    if not ok:
        raise InputError(f"non-homogeneous {what}: {f}")


class GroebnerBasis:
    """Reduced grevlex Groebner basis of an ideal; elements are monic."""

    def __init__(self, ring: PolyRing, result):
        self.ring = ring
        self._result = result
        order = result.order
        self.elements = [
            vector_to_column(k, c, order, ring, 0, 1)[0] for k, c in result.basis
        ]
        self.order = "grevlex"

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring and set(
            self.elements
        ) == set(other.elements)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    def lead_monomials(self) -> list:
        return [f.leading_monomial() for f in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        self.ring.check_same(f.ring)
        if not f:
            return f
        order = self._result.order
        rk, rc = _nf(column_to_vector([f], order), self._result)
        return vector_to_column(rk, rc, order, self.ring, 0, 1)[0]

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def is_unit(self) -> bool:
        return any(f.is_constant() for f in self.elements)


class Ideal:
    """Homogeneous ideal given by generators; the reduced GB is computed lazily
    and cached (the slot is filled at most once)."""

    def __init__(self, ring: PolyRing, generators=(), *, check: bool = True):
        gens = []
        for g in generators:
            if isinstance(g, (int,)):
                g = ring.const(g)
            ring.check_same(g.ring)
            if check:
                _check_homogeneous(g)
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators)) or '0'})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")" if self.generators else "(0)"

    def __reduce__(self):
        return (Ideal, (self.ring, self.generators))

    @property
    def gens(self):
        return self.generators

    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def contains(self, f) -> bool:
        if isinstance(f, Ideal):
            return all(self.contains(g) for g in f.generators)
        return self.gb().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb() == other.gb()

    def __hash__(self):
        return hash((self.ring, frozenset(self.gb().elements)))

    def __add__(self, other: Ideal) -> Ideal:
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.generators + other.generators, check=False)

    def __mul__(self, other: Ideal) -> Ideal:
        self.ring.check_same(other.ring)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators], check=False)

    def is_zero(self) -> bool:
        return not self.generators

    def is_proper(self) -> bool:
        return not self.gb().is_unit()

    def minimalized(self) -> Ideal:
        """Same ideal on a minimal homogeneous generating set."""
        if not self.generators:
            return self
        keep = minimal_subset(self.ring, [[g] for g in self.generators], [0])
        return Ideal(self.ring, [self.generators[i] for i in keep], check=False)

    def is_minimally_generated(self) -> bool:
        return len(self.minimalized().generators) == len(self.generators)

    def max_degree(self) -> int:
        return max((g.degree() for g in self.generators), default=0)

    def dim(self) -> int:
        return dim_quotient(self)

    def grade(self) -> int:
        return grade_of_ideal(self)

    def hilbert_function(self, t: int) -> int:
        return hilbert_function(self, t)


def buchberger(I: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis (grevlex) of a homogeneous ideal."""
    ring = I.ring
    for g in I.generators:
        _check_homogeneous(g)
    order = ModuleOrder(ring.n, [0], None, get_limits().degree_cap)
    vecs = [column_to_vector([g], order) for g in I.generators]
    res = _buchberger(vecs, order, ring.characteristic, keep_store=True)
    return GroebnerBasis(ring, res)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


def _ideal_from_columns(ring, polys) -> Ideal:
    polys = [f.monic() for f in polys if f]
    if not polys:
        return Ideal(ring, [])
    keep = minimal_subset(ring, [[f] for f in polys], [0])
    return Ideal(ring, [polys[i] for i in keep], check=False)


def colon_element(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g) = {f : f g in I}."""
    ring = I.ring
    if not g:
        return Ideal(ring, [ring.one()])
    cols = [[g]] + [[h] for h in I.generators]
    twists = [g.degree()] + [h.degree() for h in I.generators]
    ker, _ = kernel_columns(ring, cols, [0], twists, minimal=True)
    return _ideal_from_columns(ring, [v[0] for v in ker])


def colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {f : f J contained in I}, as an intersection of element colons."""
    I.ring.check_same(J.ring)
    result = None
    for g in J.generators:
        q = colon_element(I, g)
        result = q if result is None else intersect(result, q)
    if result is None:
        return Ideal(I.ring, [I.ring.one()])
    return result


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I intersected with J, read off from the syzygies of the concatenated
    generator row: sum a_k f_k over kernel vectors (a, b) of [I | J]."""
    I.ring.check_same(J.ring)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    a = list(I.generators)
    b = list(J.generators)
    cols = [[f] for f in a + b]
    twists = [f.degree() for f in a + b]
    ker, _ = kernel_columns(ring, cols, [0], twists, minimal=True)
    out = []
    for v in ker:
        s = ring.zero()
        for coef, f in zip(v[: len(a)], a):
            if coef:
                s = s + coef * f
        out.append(s)
    return _ideal_from_columns(ring, out)


def _max_independent(n: int, lead_monos) -> int:
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lead_monos]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            Us = set(U)
            if not any(s <= Us for s in supports):
                return size
    return -1


def dim_quotient(I: Ideal) -> int:
    """Krull dimension of R/I: largest set of variables independent modulo the
    lead-term ideal."""
    G = I.gb()
    if G.is_unit():
        raise UnitIdealError("dimension of R/I is undefined for the unit ideal")
    return _max_independent(I.ring.n, G.lead_monomials())


def grade_of_ideal(I: Ideal) -> int:
    return I.ring.n - dim_quotient(I)


def hilbert_function(I: Ideal, t: int) -> int:
    """dim_k (R/I)_t, counting standard monomials of degree t."""
    if t < 0:
        return 0
    lead = I.gb().lead_monomials()
    count = 0
    for m in monomials_of_degree(I.ring.n, t):
        if not any(all(a <= b for a, b in zip(l, m)) for l in lead):
            count += 1
    return count
