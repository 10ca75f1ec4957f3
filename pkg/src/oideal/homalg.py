"""Homological algebra on graded free complexes: duals, Ext, Koszul complexes,
chain-map lifts, mapping cones and induced maps on Tor(k, -)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ._vectors import Lifter, kernel_columns
from .errors import InputError, LiftError
from .modsyz import FreeModule, GradedMap, Presentation, block_matrix, minimal_generators
from .resolution import Complex, Resolution, minimal_free_resolution

__all__ = [
    "Complex",
    "ChainMapLift",
    "ModuleMap",
    "dualize",
    "cohomology",
    "ext_module",
    "koszul_complex",
    "lift_chain_map",
    "mapping_cone",
    "tor_map",
    "tor_matrix",
]


def dualize(C: Complex) -> Complex:
    """Hom(C, R): transpose every map and negate every twist.

    A chain complex becomes a cochain complex on the same index set and vice
    versa, so dualizing twice returns the original complex.
    """
    mods = [F.dual() for F in C.modules]
    maps = [d.transpose() for d in C.maps]
    direction = "cochain" if C.direction == "chain" else "chain"
    return Complex(C.ring, mods, maps, direction=direction)


def cohomology(D: Complex, i: int) -> Presentation:
    """Minimal presentation of H^i = ker(d^i) / im(d^{i-1}) of a cochain complex."""
    if D.direction != "cochain":
        raise InputError("cohomology expects a cochain complex")
    ring = D.ring
    Fi = D.module(i)
    if Fi.rank == 0:
        return Presentation.free(ring, FreeModule(()))
    out = D.differential(i)
    if out.nrows:
        Z, zt = kernel_columns(ring, out.columns(), out.target.degrees, Fi.degrees)
    else:
        Z = [[ring.one() if r == c else ring.zero() for r in range(Fi.rank)] for c in range(Fi.rank)]
        zt = list(Fi.degrees)
    if not Z:
        return Presentation.free(ring, FreeModule(()))
    inc = D.differential(i - 1)
    B = inc.columns() if i >= 1 else []
    btw = list(inc.source.degrees) if i >= 1 else []
    k = len(Z)
    if B:
        rel, rt = kernel_columns(ring, Z + B, Fi.degrees, zt + btw)
        rel = [c[:k] for c in rel]
        pairs = [(c, t) for c, t in zip(rel, rt) if any(c)]
    else:
        pairs = []
    G = FreeModule(tuple(zt))
    A = GradedMap.from_columns(ring, FreeModule(tuple(t for _, t in pairs)), G, [c for c, _ in pairs], check=False)
    return minimal_generators(Presentation(A))


def ext_module(M: Presentation, i: int, res: Resolution | None = None) -> Presentation:
    """Ext^i_R(M, R) as a minimal presentation, from the dual of a minimal
    resolution of M."""
    n = M.ring.n
    if not 0 <= i <= n:
        raise InputError(f"Ext index {i} outside 0..{n}")
    if res is None:
        res = minimal_free_resolution(M)
    return cohomology(dualize(res), i)


def koszul_complex(seq) -> Complex:
    """Koszul complex on ``seq``; basis of K_i is the i-subsets in
    lexicographic order and d(e_S) = sum_j (-1)^j s_j e_{S - s_j}."""
    seq = list(seq)
    if not seq:
        raise InputError("Koszul complex needs a nonempty sequence")
    ring = seq[0].ring
    degs = []
    for f in seq:
        ok, d = f.is_homogeneous()
        if not ok or not f:
            raise InputError(f"Koszul sequence entry must be nonzero homogeneous: {f}")
        degs.append(d)
    m = len(seq)
    subsets = [list(combinations(range(m), i)) for i in range(m + 1)]
    mods = [FreeModule(tuple(sum(degs[j] for j in S) for S in subs)) for subs in subsets]
    maps = []
    for i in range(1, m + 1):
        index = {S: r for r, S in enumerate(subsets[i - 1])}
        entries = [[ring.zero()] * len(subsets[i]) for _ in subsets[i - 1]]
        for c, S in enumerate(subsets[i]):
            for j, s in enumerate(S):
                T = S[:j] + S[j + 1:]
                f = seq[s] if j % 2 == 0 else -seq[s]
                entries[index[T]][c] = f
        maps.append(GradedMap(ring, mods[i], mods[i - 1], entries, check=False))
    return Complex(ring, mods, maps)


@dataclass
class ChainMapLift:
    """Components f_i : F_i -> G_i of a chain map lifting ``components[0]``."""

    source: Complex
    target: Complex
    components: list

    def component(self, i) -> GradedMap:
        if 0 <= i < len(self.components):
            return self.components[i]
        return GradedMap.zero(self.source.ring, self.source.module(i), self.target.module(i))

    def commutes(self) -> bool:
        for i in range(1, len(self.components)):
            lhs = self.target.differential(i) @ self.components[i]
            rhs = self.components[i - 1] @ self.source.differential(i)
            if lhs != rhs:
                return False
        return True


def lift_chain_map(f0: GradedMap, F: Complex, G: Complex, *, strategy: int = 0, upto: int | None = None) -> ChainMapLift:
    """Lift f0 : F_0 -> G_0 (a map on generators of H_0) to a chain map F -> G.

    Stage 1 checks that relations go to relations; a failure there means f0
    is not well defined, a failure later means G is not acyclic.
    """
    if F.direction != "chain" or G.direction != "chain":
        raise InputError("chain-map lifting expects chain complexes")
    if f0.source != F.module(0) or f0.target != G.module(0):
        raise InputError("f0 must map F_0 to G_0")
    ring = F.ring
    top = F.length if upto is None else min(upto, F.length)
    comps = [f0]
    for i in range(1, top + 1):
        dF = F.differential(i)
        dG = G.differential(i)
        images = (comps[i - 1] @ dF).columns()
        Gi = G.module(i)
        if dG.ncols:
            lifter = Lifter(ring, dG.columns(), dG.target.degrees, dG.source.degrees, strategy)
        cols = []
        for c, v in enumerate(images):
            if not any(v):
                cols.append([ring.zero()] * Gi.rank)
                continue
            w = lifter.lift(v) if dG.ncols else None
            if w is None:
                why = "f0 is not well defined (a relation does not map into the relations)" if i == 1 \
                    else "target complex is not exact here"
                raise LiftError(f"lift failed at stage {i}, column {c}: {why}", stage=i)
            cols.append(w)
        comps.append(GradedMap.from_columns(ring, F.module(i), Gi, cols, check=False))
    lift = ChainMapLift(F, G, comps)
    if not lift.commutes():
        raise LiftError("lifted squares do not commute", stage=None)
    return lift


def mapping_cone(L: ChainMapLift) -> Complex:
    """Cone(f)_i = G_i + F_{i-1} with d = [[d_G, f_{i-1}], [0, -d_F]]."""
    F, G = L.source, L.target
    ring = F.ring
    top = max(G.length, F.length + 1)
    mods = [G.module(i) + F.module(i - 1) for i in range(top + 1)]
    maps = []
    for i in range(1, top + 1):
        blocks = [
            [G.differential(i), L.component(i - 1)],
            [GradedMap.zero(ring, G.module(i), F.module(i - 2)), -F.differential(i - 1) if i >= 2 else
             GradedMap.zero(ring, F.module(i - 1), F.module(i - 2))],
        ]
        maps.append(block_matrix(ring, mods[i], mods[i - 1], blocks))
    return Complex(ring, mods, maps)


class ModuleMap:
    """A graded homomorphism coker(A) -> coker(B) given by the images of the
    generators: ``matrix`` maps the generators of ``source`` to those of
    ``target``."""

    def __init__(self, source: Presentation, target: Presentation, matrix: GradedMap):
        if matrix.source != source.generators or matrix.target != target.generators:
            raise InputError("matrix must map source generators to target generators")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, M: Presentation) -> ModuleMap:
        return cls(M, M, GradedMap.identity(M.ring, M.generators))

    def on_minimal(self, Fres: Resolution, Gres: Resolution) -> GradedMap:
        """The map expressed on the minimal generators used by two resolutions."""
        Pm, Pn = Fres.augmentation, Gres.augmentation
        inc = self.matrix.select(cols=Pm.kept)
        out = Pn.projection @ inc
        return GradedMap(out.ring, Fres.module(0), Gres.module(0), out.entries, check=False)


def tor_matrix(lift: ChainMapLift, i: int) -> list:
    """Constant-term reduction of the i-th lift component."""
    return lift.component(i).constant_matrix()


def tor_map(f: ModuleMap, i: int, *, source_res: Resolution | None = None,
            target_res: Resolution | None = None, strategy: int = 0) -> list:
    """Tor_i(k, M) -> Tor_i(k, N) in the bases given by the minimal resolutions:
    a b_i(N) x b_i(M) matrix over k."""
    if i < 0:
        raise InputError("Tor index must be non-negative")
    F = source_res if source_res is not None else minimal_free_resolution(f.source)
    G = target_res if target_res is not None else minimal_free_resolution(f.target)
    if not (F.minimal and G.minimal):
        raise InputError("tor_map needs minimal resolutions")
    lift = lift_chain_map(f.on_minimal(F, G), F, G, strategy=strategy, upto=i)
    return tor_matrix(lift, i)
