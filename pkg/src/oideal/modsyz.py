"""Graded free modules, homogeneous maps between them, presentations, and the
syzygy / lift / minimalization / annihilator operations built on the module
Groebner engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._engine import buchberger as _buchberger
from ._order import ModuleOrder
from ._vectors import Lifter, column_to_vector, kernel_columns, minimal_subset
from .algebra import Polynomial, PolyRing, monomials_of_degree
from .errors import InputError
from .groebner import Ideal, _max_independent, intersect
from .limits import get_limits

__all__ = [
    "FreeModule",
    "GradedMap",
    "Presentation",
    "syzygies",
    "kernel_of_map",
    "lift_through",
    "minimal_generators",
    "annihilator",
]


@dataclass(frozen=True)
class FreeModule:
    """R(-a_1) + ... + R(-a_r); ``degrees[i]`` is the degree of basis vector i."""

    degrees: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def twists(self) -> tuple:
        return self.degrees

    def dual(self) -> FreeModule:
        return FreeModule(tuple(-d for d in self.degrees))

    def __add__(self, other: FreeModule) -> FreeModule:
        return FreeModule(self.degrees + other.degrees)

    def shift(self, s: int) -> FreeModule:
        return FreeModule(tuple(d + s for d in self.degrees))

    def hilbert_function(self, n: int, t: int) -> int:
        return sum(len(monomials_of_degree(n, t - d)) for d in self.degrees)


def _entry_degree_ok(f: Polynomial, want: int) -> bool:
    if not f:
        return True
    ok, d = f.is_homogeneous()
    return ok and d == want


class GradedMap:
    """Matrix of homogeneous polynomials ``entries[r][c]`` from ``source`` to
    ``target``; entry (r, c) has degree source[c] - target[r] or is zero."""

    __slots__ = ("ring", "source", "target", "entries")

    def __init__(self, ring: PolyRing, source: FreeModule, target: FreeModule, entries, *, check=True):
        self.ring = ring
        self.source = source if isinstance(source, FreeModule) else FreeModule(tuple(source))
        self.target = target if isinstance(target, FreeModule) else FreeModule(tuple(target))
        rows = tuple(tuple(r) for r in entries)
        if len(rows) != self.target.rank or any(len(r) != self.source.rank for r in rows):
            raise InputError(
                f"matrix shape {len(rows)}x{len(rows[0]) if rows else 0} does not match "
                f"{self.target.rank}x{self.source.rank}"
            )
        if check:
            for r, row in enumerate(rows):
                for c, f in enumerate(row):
                    ring.check_same(f.ring)
                    want = self.source.degrees[c] - self.target.degrees[r]
                    if not _entry_degree_ok(f, want):
                        raise InputError(
                            f"entry ({r},{c}) = {f} is not homogeneous of degree {want}"
                        )
        self.entries = rows

    def __reduce__(self):
        return (_rebuild_map, (self.ring, self.source, self.target, self.entries))

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_columns(cls, ring, source, target, columns, check=True):
        m = len(target.degrees) if isinstance(target, FreeModule) else len(target)
        rows = [[col[r] for col in columns] for r in range(m)]
        return cls(ring, source, target, rows, check=check)

    @classmethod
    def identity(cls, ring, F: FreeModule):
        n = F.rank
        return cls(ring, F, F, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], check=False)

    @classmethod
    def zero(cls, ring, source: FreeModule, target: FreeModule):
        return cls(ring, source, target, [[ring.zero()] * source.rank for _ in range(target.rank)], check=False)

    # -- shape ---------------------------------------------------------------
    @property
    def nrows(self) -> int:
        return self.target.rank

    @property
    def ncols(self) -> int:
        return self.source.rank

    def column(self, c) -> list:
        return [row[c] for row in self.entries]

    def columns(self) -> list:
        return [self.column(c) for c in range(self.ncols)]

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    # -- algebra -------------------------------------------------------------
    def __matmul__(self, other: GradedMap) -> GradedMap:
        """Composition ``self o other``."""
        self.ring.check_same(other.ring)
        if other.target.degrees != self.source.degrees:
            raise InputError("composition of maps with incompatible free modules")
        zero = self.ring.zero()
        rows = []
        for r in range(self.nrows):
            row = []
            for c in range(other.ncols):
                s = zero
                for k in range(self.ncols):
                    a = self.entries[r][k]
                    if a:
                        b = other.entries[k][c]
                        if b:
                            s = s + a * b
                row.append(s)
            rows.append(row)
        return GradedMap(self.ring, other.source, self.target, rows, check=False)

    def apply(self, col) -> list:
        zero = self.ring.zero()
        out = []
        for r in range(self.nrows):
            s = zero
            for a, b in zip(self.entries[r], col):
                if a and b:
                    s = s + a * b
            out.append(s)
        return out

    def __add__(self, other: GradedMap) -> GradedMap:
        if (self.source, self.target) != (other.source, other.target):
            raise InputError("sum of maps with different source/target")
        rows = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        return GradedMap(self.ring, self.source, self.target, rows, check=False)

    def __neg__(self) -> GradedMap:
        return GradedMap(self.ring, self.source, self.target, [[-a for a in r] for r in self.entries], check=False)

    def __sub__(self, other):
        return self + (-other)

    def transpose(self) -> GradedMap:
        """Dual map Hom(target, R) -> Hom(source, R)."""
        rows = [list(col) for col in self.columns()]
        return GradedMap(self.ring, self.target.dual(), self.source.dual(), rows, check=False)

    dual = transpose

    def __eq__(self, other):
        return (
            isinstance(other, GradedMap)
            and self.source == other.source
            and self.target == other.target
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.source, self.target, self.entries))

    def is_zero(self) -> bool:
        return all(not f for row in self.entries for f in row)

    def constant_matrix(self) -> list:
        """Entries reduced modulo the irrelevant ideal (constant terms)."""
        return [[f.constant_term() for f in row] for row in self.entries]

    def has_unit_entry(self) -> bool:
        return any(f and f.is_constant() for row in self.entries for f in row)

    def select(self, rows=None, cols=None) -> GradedMap:
        rows = list(range(self.nrows)) if rows is None else list(rows)
        cols = list(range(self.ncols)) if cols is None else list(cols)
        ent = [[self.entries[r][c] for c in cols] for r in rows]
        src = FreeModule(tuple(self.source.degrees[c] for c in cols))
        tgt = FreeModule(tuple(self.target.degrees[r] for r in rows))
        return GradedMap(self.ring, src, tgt, ent, check=False)

    def to_strings(self) -> list:
        return [[str(f) for f in row] for row in self.entries]

    def __repr__(self):
        return (
            f"GradedMap({list(self.source.degrees)} -> {list(self.target.degrees)}, "
            f"{self.to_strings()})"
        )


def _rebuild_map(ring, source, target, entries):
    return GradedMap(ring, source, target, entries, check=False)


def hstack(ring, target: FreeModule, maps: Sequence[GradedMap]) -> GradedMap:
    cols = []
    degs = []
    for m in maps:
        cols.extend(m.columns())
        degs.extend(m.source.degrees)
    return GradedMap.from_columns(ring, FreeModule(tuple(degs)), target, cols, check=False)


def block_matrix(ring, source: FreeModule, target: FreeModule, blocks) -> GradedMap:
    """Assemble a map from a 2-D list of blocks (GradedMap or None for zero)."""
    rows = []
    for brow in blocks:
        nr = None
        for b in brow:
            if b is not None:
                nr = b.nrows
        part = [[] for _ in range(nr or 0)]
        for b in brow:
            for r in range(nr or 0):
                part[r].extend(b.entries[r])
        rows.extend(part)
    return GradedMap(ring, source, target, rows, check=False)


class Presentation:
    """The module coker(relations: F_1 -> F_0).

    ``kept`` and ``projection`` are set by :func:`minimal_generators`: the
    surviving original generator indices and the map from the original F_0
    onto the new one inducing the isomorphism of cokernels.
    """

    def __init__(self, relations: GradedMap, *, kept=None, projection=None):
        self.relations = relations
        self.ring = relations.ring
        self.kept = kept
        self.projection = projection
        self._gb = None

    def __reduce__(self):
        return (Presentation, (self.relations,))

    @classmethod
    def cyclic(cls, I: Ideal) -> Presentation:
        """R/I presented by the row of generators of I."""
        ring = I.ring
        gens = list(I.generators)
        src = FreeModule(tuple(g.degree() for g in gens))
        return cls(GradedMap(ring, src, FreeModule((0,)), [gens]))

    @classmethod
    def free(cls, ring, F: FreeModule) -> Presentation:
        return cls(GradedMap.zero(ring, FreeModule(()), F))

    @classmethod
    def from_matrix(cls, ring, entries, target_degrees=None) -> Presentation:
        """Build a presentation from a relation matrix, inferring source degrees."""
        m = len(entries)
        k = len(entries[0]) if entries else 0
        tdeg = tuple(target_degrees) if target_degrees is not None else (0,) * m
        sdeg = []
        for c in range(k):
            d = None
            for r in range(m):
                f = entries[r][c]
                if f:
                    ok, fd = f.is_homogeneous()
                    if not ok:
                        raise InputError(f"non-homogeneous relation entry {f}")
                    d = fd + tdeg[r]
                    break
            if d is None:
                raise InputError(f"relation column {c} is zero")
            sdeg.append(d)
        return cls(GradedMap(ring, FreeModule(tuple(sdeg)), FreeModule(tdeg), entries))

    @property
    def generators(self) -> FreeModule:
        return self.relations.target

    @property
    def rank(self) -> int:
        return self.relations.target.rank

    def __repr__(self):
        return f"Presentation(coker {self.relations!r})"

    # Groebner data of the relation submodule (TOP grevlex)
    def _module_gb(self):
        if self._gb is None:
            ring = self.ring
            order = ModuleOrder(ring.n, self.generators.degrees, None, get_limits().degree_cap)
            vecs = [column_to_vector(c, order) for c in self.relations.columns() if any(c)]
            self._gb = _buchberger(vecs, order, ring.characteristic) if vecs else None
            self._gb_order = order
        return self._gb

    def _lead_by_comp(self):
        gb = self._module_gb()
        lead = {c: [] for c in range(self.rank)}
        if gb is not None:
            for comp, exps in gb.lead_terms():
                lead[comp].append(exps)
        return lead

    def hilbert_function(self, t: int) -> int:
        """dim_k M_t via standard monomials of the relation module."""
        n = self.ring.n
        total = 0
        for comp, leads in self._lead_by_comp().items():
            s = t - self.generators.degrees[comp]
            for m in monomials_of_degree(n, s):
                if not any(all(a <= b for a, b in zip(l, m)) for l in leads):
                    total += 1
        return total

    def dim(self):
        """Krull dimension of the module; ``None`` for the zero module."""
        n = self.ring.n
        best = None
        for comp, leads in self._lead_by_comp().items():
            if any(not any(l) for l in leads):
                continue
            d = _max_independent(n, leads)
            best = d if best is None else max(best, d)
        return best

    def is_zero(self) -> bool:
        return self.dim() is None

    def max_twist(self) -> int:
        degs = self.generators.degrees + self.relations.source.degrees
        return max((abs(d) for d in degs), default=0)


def syzygies(M: GradedMap) -> GradedMap:
    """Map onto ker(M) from a free module on minimal generators of the kernel."""
    cols, twists = kernel_columns(M.ring, M.columns(), M.target.degrees, M.source.degrees)
    return GradedMap.from_columns(M.ring, FreeModule(tuple(twists)), M.source, cols, check=False)


kernel_of_map = syzygies


def lift_through(M: GradedMap, v, *, strategy: int = 0):
    """``w`` with ``M w = v``, or ``None`` when ``v`` is not in the image of M."""
    return Lifter(M.ring, M.columns(), M.target.degrees, M.source.degrees, strategy).lift(v)


def image_minimal(M: GradedMap) -> GradedMap:
    """Columns of M restricted to a minimal generating set of its image."""
    cols = M.columns()
    nz = [c for c in range(M.ncols) if any(cols[c])]
    if not nz:
        return M.select(cols=[])
    keep = minimal_subset(M.ring, [cols[c] for c in nz], M.target.degrees)
    return M.select(cols=[nz[i] for i in keep])


def minimal_generators(P: Presentation) -> Presentation:
    """Pivot away unit relation entries (lexicographically first by (row, col))
    until none remain; the new rank is the minimal number of generators."""
    ring = P.ring
    field = ring.field
    A = [list(col) for col in P.relations.columns()]
    src = list(P.relations.source.degrees)
    tgt = list(P.relations.target.degrees)
    m0 = len(tgt)
    gens = list(range(m0))
    # T[s] expresses current generator s... rows of the projection old -> new
    T = [[ring.one() if i == j else ring.zero() for j in range(m0)] for i in range(m0)]
    while True:
        pivot = None
        for r in range(len(tgt)):
            for c in range(len(A)):
                f = A[c][r]
                if f and f.is_constant():
                    pivot = (r, c)
                    break
            if pivot:
                break
        if pivot is None:
            break
        r, c = pivot
        pcol = A[c]
        u_inv = field.inv(pcol[r].constant_term())
        for c2 in range(len(A)):
            if c2 == c:
                continue
            a = A[c2][r]
            if a:
                factor = a.scale(u_inv)
                A[c2] = [x - factor * y for x, y in zip(A[c2], pcol)]
        # projection: old e_g -> ... replace row r contributions
        for s in range(len(tgt)):
            if s == r or not pcol[s]:
                continue
            coef = -pcol[s].scale(u_inv)
            T[s] = [ts + coef * tr for ts, tr in zip(T[s], T[r])]
        del T[r]
        del A[c]
        del src[c]
        A = [col[:r] + col[r + 1:] for col in A]
        del tgt[r]
        del gens[r]
    keep_cols = [i for i, col in enumerate(A) if any(col)]
    A = [A[i] for i in keep_cols]
    src = [src[i] for i in keep_cols]
    rel = GradedMap.from_columns(ring, FreeModule(tuple(src)), FreeModule(tuple(tgt)), A, check=False)
    proj = GradedMap(ring, P.relations.target, FreeModule(tuple(tgt)), T, check=False)
    return Presentation(rel, kept=gens, projection=proj)


def annihilator(P: Presentation) -> Ideal:
    """{f : f M = 0}: intersection over generators e_j of (im A : e_j)."""
    ring = P.ring
    m = P.rank
    if m == 0:
        return Ideal(ring, [ring.one()])
    A = P.relations
    tgt = P.generators.degrees
    result = None
    for j in range(m):
        e = [ring.one() if r == j else ring.zero() for r in range(m)]
        cols = [e] + A.columns()
        twists = [tgt[j]] + list(A.source.degrees)
        ker, _ = kernel_columns(ring, cols, tgt, twists, minimal=True)
        gens = [v[0].monic() for v in ker if v[0]]
        q = Ideal(ring, gens, check=False).minimalized() if gens else Ideal(ring, [])
        result = q if result is None else intersect(result, q)
        if result.is_zero():
            break
    return result
