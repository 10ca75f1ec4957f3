"""Minimal graded free resolutions over R and (truncated) over quotients R/J,
minimalization of complexes, Betti tables and exactness certificates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ._vectors import kernel_columns, minimal_subset
from .errors import InputError
from .groebner import Ideal
from .linalg import rank as k_rank
from .modsyz import (
    FreeModule,
    GradedMap,
    Presentation,
    image_minimal,
    lift_through,
    minimal_generators,
    syzygies,
)

__all__ = [
    "Complex",
    "Resolution",
    "BettiTable",
    "minimal_free_resolution",
    "nonminimal_resolution",
    "minimalize",
    "betti_table",
    "quotient_ring_resolution",
    "certify_resolution",
]


class Complex:
    """Complex of graded free modules.

    ``modules[i]`` is C_i.  For a chain complex ``maps[i - 1]`` is the
    differential d_i : C_i -> C_{i-1}; for a cochain complex it is
    d^{i-1} : C^{i-1} -> C^i.
    """

    def __init__(self, ring, modules, maps, *, direction: str = "chain"):
        self.ring = ring
        self.modules = list(modules)
        self.maps = list(maps)
        self.direction = direction
        if len(self.maps) != max(len(self.modules) - 1, 0):
            raise InputError("a complex needs exactly one map between consecutive modules")
        if direction not in ("chain", "cochain"):
            raise InputError(f"unknown complex direction {direction!r}")
        for i, d in enumerate(self.maps, start=1):
            src, tgt = (i, i - 1) if direction == "chain" else (i - 1, i)
            if d.source != self.modules[src] or d.target != self.modules[tgt]:
                raise InputError(f"map {i} does not match C_{src} -> C_{tgt}")

    def __len__(self):
        return len(self.maps)

    @property
    def length(self) -> int:
        return len(self.maps)

    def module(self, i) -> FreeModule:
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return FreeModule(())

    def differential(self, i) -> GradedMap:
        """Chain: d_i : C_i -> C_{i-1}.  Cochain: d^i : C^i -> C^{i+1}.
        A zero map outside the stored range."""
        if self.direction == "chain":
            if 1 <= i <= len(self.maps):
                return self.maps[i - 1]
            return GradedMap.zero(self.ring, self.module(i), self.module(i - 1))
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return GradedMap.zero(self.ring, self.module(i), self.module(i + 1))

    def ranks(self) -> list:
        return [F.rank for F in self.modules]

    def is_complex(self) -> bool:
        if self.direction == "chain":
            return all((self.maps[i - 1] @ self.maps[i]).is_zero() for i in range(1, len(self.maps)))
        return all((self.maps[i] @ self.maps[i - 1]).is_zero() for i in range(1, len(self.maps)))

    def is_minimal(self) -> bool:
        return not any(d.has_unit_entry() for d in self.maps)

    def trimmed(self) -> Complex:
        """Drop trailing zero modules."""
        mods = list(self.modules)
        maps = list(self.maps)
        while len(mods) > 1 and mods[-1].rank == 0:
            mods.pop()
            maps.pop()
        return type(self)._rebuild(self, mods, maps)

    @staticmethod
    def _rebuild(template, modules, maps):
        return Complex(template.ring, modules, maps, direction=template.direction)

    def __repr__(self):
        return f"{type(self).__name__}(ranks={self.ranks()})"


class Resolution(Complex):
    """Free resolution F_. of H_0 = coker(d_1).

    ``complete`` is True when the kernel of the last differential was shown to
    be zero; ``over`` is the ideal J when working over R/J (differentials are
    then taken modulo J).
    """

    def __init__(self, ring, modules, maps, *, augmentation=None, minimal=True, complete=False, over=None):
        super().__init__(ring, modules, maps)
        self.augmentation = augmentation
        self.minimal = minimal
        self.complete = complete
        self.over = over

    @staticmethod
    def _rebuild(template, modules, maps):
        return Resolution(
            template.ring, modules, maps,
            augmentation=getattr(template, "augmentation", None),
            minimal=getattr(template, "minimal", False),
            complete=getattr(template, "complete", False),
            over=getattr(template, "over", None),
        )


def minimal_free_resolution(P: Presentation, max_len: int | None = None) -> Resolution:
    """Minimal resolution of coker(P) over R by iterated minimal syzygies.

    ``max_len`` defaults to n + 1, which forces termination to be observed
    (Hilbert's syzygy theorem bounds the length by n).
    """
    ring = P.ring
    n = ring.n
    explicit = max_len is not None
    if max_len is None:
        max_len = n + 1
    if max_len < 1:
        raise InputError("max_len must be at least 1")
    P0 = minimal_generators(P)
    d1 = image_minimal(P0.relations)
    modules = [P0.generators]
    maps = []
    complete = False
    if P0.rank == 0 or d1.ncols == 0:
        complete = True
    else:
        maps.append(d1)
        modules.append(d1.source)
        while True:
            if len(maps) >= max_len:
                break
            K = syzygies(maps[-1])
            if K.ncols == 0:
                complete = True
                break
            maps.append(K)
            modules.append(K.source)
    if not complete and not explicit:
        raise AssertionError(
            f"resolution did not terminate within n + 1 = {n + 1} steps (syzygy theorem violated)"
        )
    return Resolution(ring, modules, maps, augmentation=P0, minimal=True, complete=complete)


def nonminimal_resolution(P: Presentation, length: int) -> Resolution:
    """Resolution built from full Groebner-basis kernels (no minimalization),
    truncated at ``length``; used as an independent oracle."""
    ring = P.ring
    A = P.relations
    cols = [c for c in A.columns() if any(c)]
    degs = [A.source.degrees[i] for i, c in enumerate(A.columns()) if any(c)]
    d1 = GradedMap.from_columns(ring, FreeModule(tuple(degs)), A.target, cols, check=False)
    modules = [A.target]
    maps = []
    complete = False
    if d1.ncols:
        modules.append(d1.source)
        maps.append(d1)
        while len(maps) < length:
            d = maps[-1]
            kc, kt = kernel_columns(ring, d.columns(), d.target.degrees, d.source.degrees, minimal=False)
            if not kc:
                complete = True
                break
            K = GradedMap.from_columns(ring, FreeModule(tuple(kt)), d.source, kc, check=False)
            maps.append(K)
            modules.append(K.source)
    else:
        complete = True
    return Resolution(ring, modules, maps, augmentation=P, minimal=False, complete=complete)


def _cancel(modules, maps, i, r, c):
    """Remove the unit entry at (r, c) of d_i together with the trivial summand
    it spans: basis c of C_i and basis r of C_{i-1}."""
    d = maps[i - 1]
    A = [list(row) for row in d.entries]
    field = d.ring.field
    u_inv = field.inv(A[r][c].constant_term())
    new_rows = []
    for s in range(len(A)):
        if s == r:
            continue
        gamma = A[s][c]
        if gamma:
            g = gamma.scale(u_inv)
            new_rows.append([A[s][t] - g * A[r][t] for t in range(len(A[s])) if t != c])
        else:
            new_rows.append([A[s][t] for t in range(len(A[s])) if t != c])
    src = FreeModule(tuple(x for t, x in enumerate(d.source.degrees) if t != c))
    tgt = FreeModule(tuple(x for s, x in enumerate(d.target.degrees) if s != r))
    maps[i - 1] = GradedMap(d.ring, src, tgt, new_rows, check=False)
    modules[i] = src
    modules[i - 1] = tgt
    if i < len(maps):  # d_{i+1}: drop row c
        up = maps[i]
        maps[i] = GradedMap(up.ring, up.source, src,
                            [row for s, row in enumerate(up.entries) if s != c], check=False)
    if i >= 2:  # d_{i-1}: drop column r
        down = maps[i - 2]
        maps[i - 2] = GradedMap(down.ring, tgt, down.target,
                                [[f for t, f in enumerate(row) if t != r] for row in down.entries],
                                check=False)


def minimalize(C: Complex) -> Complex:
    """Homotopy-equivalent complex without unit entries (Gaussian elimination
    of split summands, lexicographically first unit pivot each time)."""
    modules = list(C.modules)
    maps = list(C.maps)
    while True:
        hit = None
        for i, d in enumerate(maps, start=1):
            for r, row in enumerate(d.entries):
                for c, f in enumerate(row):
                    if f and f.is_constant():
                        hit = (i, r, c)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        _cancel(modules, maps, *hit)
    out = type(C)._rebuild(C, modules, maps).trimmed()
    if isinstance(out, Resolution):
        out.minimal = True
    return out


@dataclass
class BettiTable:
    """b_{i,j}: number of degree-j generators of F_i."""

    entries: dict = field(default_factory=dict)

    def ranks(self) -> list:
        if not self.entries:
            return []
        L = max(i for i, _ in self.entries)
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(L + 1)]

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def to_json(self) -> dict:
        return {"ranks": self.ranks(), "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}

    def format(self) -> str:
        """Rows indexed by j - i (the usual 'Betti diagram' layout)."""
        if not self.entries:
            return "(zero)"
        L = max(i for i, _ in self.entries)
        shifts = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["      " + "".join(str(i).rjust(width) for i in range(L + 1))]
        lines.append("total:" + "".join(str(r).rjust(width) for r in self.ranks()))
        for s in range(shifts[0], shifts[-1] + 1):
            cells = "".join(
                (str(self.entries[(i, i + s)]) if (i, i + s) in self.entries else "-").rjust(width)
                for i in range(L + 1)
            )
            lines.append(f"{s:>5}:" + cells)
        return "\n".join(lines)


def betti_table(C: Complex) -> BettiTable:
    if not C.is_minimal():
        raise InputError("betti_table needs a minimal resolution")
    entries: Counter = Counter()
    for i, F in enumerate(C.modules):
        for d in F.degrees:
            entries[(i, d)] += 1
    return BettiTable(dict(entries))


def _ideal_times_basis(ring, J: Ideal, F: FreeModule):
    cols, degs = [], []
    for r in range(F.rank):
        for g in J.generators:
            col = [ring.zero()] * F.rank
            col[r] = g
            cols.append(col)
            degs.append(g.degree() + F.degrees[r])
    return cols, degs


def _reduce_mod(col, G):
    return [G.normal_form(f) for f in col]


def quotient_ring_resolution(J: Ideal, P: Presentation, max_len: int) -> Resolution:
    """Truncated minimal resolution of coker(P) over S = R/J.

    Each step computes the kernel over R of [d | J * basis], projects it to
    the source, reduces entries modulo J and keeps a minimal generating set
    modulo J * source.
    """
    ring = P.ring
    if max_len < 1:
        raise InputError("max_len must be at least 1")
    G = J.gb()
    P0 = minimal_generators(P)
    F0 = P0.generators
    rel_cols = [_reduce_mod(c, G) for c in P0.relations.columns()]
    rel_degs = list(P0.relations.source.degrees)
    pre, _ = _ideal_times_basis(ring, J, F0)
    nz = [i for i, c in enumerate(rel_cols) if any(c)]
    keep = minimal_subset(ring, [rel_cols[i] for i in nz], F0.degrees, preseed=pre) if nz else []
    cols = [rel_cols[nz[i]] for i in keep]
    degs = [rel_degs[nz[i]] for i in keep]
    modules = [F0]
    maps = []
    complete = False
    if not cols:
        complete = True
    else:
        d = GradedMap.from_columns(ring, FreeModule(tuple(degs)), F0, cols, check=False)
        maps.append(d)
        modules.append(d.source)
        while len(maps) < max_len:
            d = maps[-1]
            jcols, jdegs = _ideal_times_basis(ring, J, d.target)
            allcols = d.columns() + jcols
            kc, kt = kernel_columns(ring, allcols, d.target.degrees, list(d.source.degrees) + jdegs, minimal=False)
            k = d.ncols
            cand, cdeg = [], []
            for col, t in zip(kc, kt):
                v = _reduce_mod(col[:k], G)
                if any(v):
                    cand.append(v)
                    cdeg.append(t)
            pre, _ = _ideal_times_basis(ring, J, d.source)
            keep = minimal_subset(ring, cand, d.source.degrees, preseed=pre) if cand else []
            if not keep:
                complete = True
                break
            K = GradedMap.from_columns(
                ring, FreeModule(tuple(cdeg[i] for i in keep)), d.source, [cand[i] for i in keep], check=False
            )
            maps.append(K)
            modules.append(K.source)
    return Resolution(ring, modules, maps, augmentation=P0, minimal=True, complete=complete, over=J)


@dataclass
class Certificate:
    composites_zero: bool
    kernel_in_image: bool
    minimal: bool
    length_ok: bool
    terminated: bool
    hilbert_ok: bool
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(
            (self.composites_zero, self.kernel_in_image, self.minimal, self.length_ok,
             self.terminated, self.hilbert_ok)
        )

    def to_json(self) -> dict:
        return {
            "composites_zero": self.composites_zero,
            "kernel_in_image": self.kernel_in_image,
            "minimal": self.minimal,
            "length_ok": self.length_ok,
            "terminated": self.terminated,
            "hilbert_ok": self.hilbert_ok,
            "details": self.details,
        }


def certify_resolution(res: Resolution, hilbert_bound: int | None = None) -> Certificate:
    """Exactness, minimality, length and Hilbert-function certificate for a
    resolution over R."""
    ring = res.ring
    details = []
    composites = res.is_complex()
    if not composites:
        details.append("some composite d_i d_{i+1} is nonzero")
    # H_0: the relation module is generated by d_1
    aug = res.augmentation
    ker_ok = True
    if aug is not None and res.length >= 1:
        d1 = res.differential(1)
        for col in aug.relations.columns():
            if any(col) and lift_through(d1, col) is None:
                ker_ok = False
                details.append("a presentation relation is not in im d_1")
                break
    for i in range(1, res.length):
        di, dnext = res.differential(i), res.differential(i + 1)
        K = syzygies(di)
        for col in K.columns():
            if lift_through(dnext, col) is None:
                ker_ok = False
                details.append(f"ker d_{i} not contained in im d_{i+1}")
                break
    if res.length >= 1 and res.complete:
        if syzygies(res.differential(res.length)).ncols:
            ker_ok = False
            details.append("last differential is not injective")
    minimal = res.is_minimal()
    length_ok = res.length <= ring.n
    hilbert_ok = True
    if res.complete and aug is not None:
        bound = hilbert_bound
        if bound is None:
            bound = max((abs(d) for F in res.modules for d in F.degrees), default=0) + 6
        for t in range(-bound, bound + 1):
            alt = sum((-1) ** i * F.hilbert_function(ring.n, t) for i, F in enumerate(res.modules))
            if alt != aug.hilbert_function(t):
                hilbert_ok = False
                details.append(f"alternating Hilbert sum differs at degree {t}")
                break
    return Certificate(composites, ker_ok, minimal, length_ok, res.complete, hilbert_ok, details)


def tor_ranks_from_nonminimal(res: Resolution) -> dict:
    """dim_k Tor_i(k, M)_j computed as homology of F' (x) k for a non-minimal
    resolution F', by graded linear algebra on constant parts."""
    p = res.ring.characteristic
    out = {}
    for i in range(len(res.modules)):
        F = res.module(i)
        if i + 1 >= len(res.modules) and not res.complete:
            break
        din = res.differential(i).constant_matrix() if i >= 1 else None
        dout = res.differential(i + 1).constant_matrix() if i + 1 < len(res.modules) else None
        for j in sorted(set(F.degrees)):
            cols = [c for c, d in enumerate(F.degrees) if d == j]
            # kernel of d_i restricted to degree j generators
            if din is not None and res.module(i - 1).rank:
                rows_j = [r for r, d in enumerate(res.module(i - 1).degrees) if d == j]
                sub = [[din[r][c] for c in cols] for r in rows_j]
                rk_in = k_rank(sub, p) if sub else 0
            else:
                rk_in = 0
            ker = len(cols) - rk_in
            if dout is not None:
                src_j = [c for c, d in enumerate(res.module(i + 1).degrees) if d == j]
                sub = [[dout[r][c] for c in src_j] for r in cols]
                rk_out = k_rank(sub, p) if src_j else 0
            else:
                rk_out = 0
            h = ker - rk_out
            if h:
                out[(i, j)] = h
    return out
