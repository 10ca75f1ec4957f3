"""Integer encoding of module terms under a degree-compatible grevlex order.

A term ``x^e * epsilon_c`` (basis vector ``c`` of a graded free module) is
mapped to a single integer key.  Integer comparison of keys is the module
order and multiplying a term by ``x^m`` adds a constant to its key, so the
reduction kernels never have to look at exponent vectors except to test
divisibility of leading terms.

Layout, with ``D = deg(e) + twist_c + off`` the (offset) twisted degree::

    key = (block * R + D * B^n - sum_i e_i * B^i) * C + (C - 1 - c)

``block`` is 1 for components in the upper (eliminated) block and 0 for the
rest, so any upper term beats any lower term.  Inside a block the order is
term-over-position: twisted degree, then reverse lex on the exponents, then
lower component index first.
"""

from __future__ import annotations

INT64_SAFE = 2**62


class ModuleOrder:
    __slots__ = (
        "n", "twists", "ncomp", "upper", "off", "B", "Bn", "R", "C",
        "weights", "base", "cap", "_pow",
    )

    def __init__(self, n: int, twists, upper: int | None = None, degree_cap: int = 24):
        self.n = n
        self.twists = tuple(int(t) for t in twists)
        self.ncomp = len(self.twists)
        self.upper = self.ncomp if upper is None else upper
        self.cap = degree_cap
        tmax = max((abs(t) for t in self.twists), default=0)
        self.off = tmax + 1
        span = self.off + tmax + degree_cap + 2
        B = 2
        while B < span:
            B *= 2
        self.B = B
        self.Bn = B**n
        self.R = B ** (n + 1)
        self.C = max(self.ncomp, 1)
        self._pow = [B**i for i in range(n)]
        self.weights = [self.Bn - b for b in self._pow]
        self.base = [
            ((1 if c < self.upper and self.upper < self.ncomp else 0) * self.R
             + (t + self.off) * self.Bn)
            for c, t in enumerate(self.twists)
        ]

    @property
    def eliminating(self) -> bool:
        return self.upper < self.ncomp

    def fits_int64(self) -> bool:
        return 2 * self.R * self.C < INT64_SAFE

    def mono_weight(self, exps) -> int:
        w = 0
        for e, wi in zip(exps, self.weights):
            if e:
                w += e * wi
        return w

    def shift(self, exps) -> int:
        """Key increment for multiplication by ``x^exps``."""
        return self.mono_weight(exps) * self.C

    def encode(self, comp: int, exps) -> int:
        return (self.base[comp] + self.mono_weight(exps)) * self.C + (self.C - 1 - comp)

    def decode(self, key: int):
        C = self.C
        comp = C - 1 - key % C
        rest = key // C - self.base[comp]
        # rest = deg(e) * B^n - sum e_i B^i  with 0 <= sum e_i B^i < B^n
        deg = -((-rest) // self.Bn)
        s = deg * self.Bn - rest
        B = self.B
        exps = []
        for _ in range(self.n):
            s, r = divmod(s, B)
            exps.append(r)
        return comp, tuple(exps)

    def degree(self, key: int) -> int:
        """Twisted degree of the term with this key."""
        comp, exps = self.decode(key)
        return sum(exps) + self.twists[comp]

    def in_upper(self, key: int) -> bool:
        comp = self.C - 1 - key % self.C
        return comp < self.upper

    def kernel_params(self):
        return (self.n, self.B, self.Bn, self.C, tuple(self.base))
