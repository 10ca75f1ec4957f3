"""Exact coefficient fields, grevlex monomials and sparse graded polynomials.

Monomials are plain tuples of non-negative exponents.  A polynomial keeps a
dict ``{exponents: coefficient}`` with no zero coefficients; the ordered view
(:meth:`Polynomial.terms`) is strictly descending in grevlex.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

__all__ = [
    "Field",
    "QQ",
    "PolyRing",
    "Polynomial",
    "RingMismatchError",
    "grevlex_key",
    "grevlex_compare",
    "monomials_of_degree",
    "is_prime",
]


class RingMismatchError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Either the rationals (characteristic 0) or a prime field F_p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0:
            if not (is_prime(characteristic) and characteristic < 2**31):
                raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {characteristic}")
        self.characteristic = characteristic

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime_field"

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"Fp({self.characteristic})"

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"Fp {self.characteristic}"

    def __reduce__(self):
        return (Field, (self.characteristic,))

    def coerce(self, c):
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                num = c.numerator % p
                den = c.denominator % p
                if den == 0:
                    raise ZeroDivisionError(f"denominator {c.denominator} vanishes mod {p}")
                return num * pow(den, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / c

    def neg(self, c):
        p = self.characteristic
        return (-c) % p if p else -c

    def random_element(self, rng, bound: int = 9):
        """Seeded random nonzero element; small integers over QQ."""
        p = self.characteristic
        if p:
            return rng.randrange(1, p)
        while True:
            c = rng.randint(-bound, bound)
            if c:
                return Fraction(c)

    def format(self, c) -> str:
        p = self.characteristic
        if p:
            c = c - p if c > p // 2 else c
            return str(c)
        return str(c)


QQ = Field(0)


def grevlex_key(exps: tuple) -> tuple:
    """Sort key: larger key means larger in graded reverse lexicographic order."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


def grevlex_compare(a: tuple, b: tuple) -> int:
    """Return 1, 0 or -1 as ``a`` is greater, equal or smaller than ``b``."""
    if len(a) != len(b):
        raise ValueError("monomials have different numbers of variables")
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for ea, eb in zip(reversed(a), reversed(b)):
        if ea != eb:
            # the smaller exponent in the last differing variable wins
            return 1 if ea < eb else -1
    return 0


_MONO_CACHE: dict = {}


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent tuples of total degree ``d`` in ``n`` variables, grevlex descending."""
    key = (n, d)
    hit = _MONO_CACHE.get(key)
    if hit is not None:
        return hit
    if d < 0:
        out = []
    elif n == 0:
        out = [()] if d == 0 else []
    else:
        out = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        out.sort(key=grevlex_key, reverse=True)
    _MONO_CACHE[key] = out
    return out


class PolyRing:
    """The graded ring k[x_1, ..., x_n] with standard grading."""

    __slots__ = ("variables", "field", "n", "_hash")

    def __init__(self, variables: Iterable[str], field: Field = QQ):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.n = len(self.variables)
        self._hash = hash((self.variables, field))

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"

    def __reduce__(self):
        return (PolyRing, (self.variables, self.field))

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        return self.monomial((0,) * self.n, c)

    def monomial(self, exps: tuple, c=1) -> Polynomial:
        c = self.field.coerce(c)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def var(self, i) -> Polynomial:
        if isinstance(i, str):
            i = self.variables.index(i)
        e = [0] * self.n
        e[i] = 1
        return self.monomial(tuple(e))

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def from_dict(self, terms: Mapping) -> Polynomial:
        f = self.field
        d = {}
        for e, c in terms.items():
            c = f.coerce(c)
            if c:
                d[tuple(e)] = c
        return Polynomial(self, d)

    def check_same(self, other: PolyRing):
        if other != self:
            raise RingMismatchError(f"ring mismatch: {self!r} vs {other!r}")


@total_ordering
class Polynomial:
    """Immutable sparse polynomial in a :class:`PolyRing`.

    Arithmetic operators work as expected; ints and Fractions are promoted to
    constants.  Equality is exact.
    """

    __slots__ = ("ring", "_d", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        # ``terms`` must already be normalized (coerced, no zeros); use
        # PolyRing.from_dict for untrusted input.
        self.ring = ring
        self._d = terms
        self._hash = None

    def __reduce__(self):
        return (Polynomial, (self.ring, dict(self._d)))

    # -- inspection --------------------------------------------------------
    def terms(self) -> list:
        """(exponents, coefficient) pairs, strictly descending in grevlex."""
        return sorted(self._d.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def leading_term(self):
        if not self._d:
            return None
        e = max(self._d, key=grevlex_key)
        return e, self._d[e]

    def leading_monomial(self):
        lt = self.leading_term()
        return None if lt is None else lt[0]

    def degree(self):
        """Largest total degree of a term, or None for 0."""
        if not self._d:
            return None
        return max(sum(e) for e in self._d)

    def is_homogeneous(self):
        """Return ``(True, d)`` if all terms have degree d, ``(True, None)`` for 0."""
        if not self._d:
            return True, None
        degs = {sum(e) for e in self._d}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def constant_term(self):
        return self._d.get((0,) * self.ring.n, self.ring.field.zero())

    def coefficient(self, exps: tuple):
        return self._d.get(tuple(exps), self.ring.field.zero())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._d)

    # -- arithmetic --------------------------------------------------------
    def _coerce_other(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        d = dict(self._d)
        for e, c in other._d.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    d[e] = v
                else:
                    del d[e]
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return Polynomial(self.ring, {e: (-c) % p for e, c in self._d.items()})
        return Polynomial(self.ring, {e: -c for e, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        d: dict = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = d.get(e)
                c = c1 * c2
                d[e] = c if v is None else v + c
        if p:
            d = {e: c % p for e, c in d.items() if c % p}
        else:
            d = {e: c for e, c in d.items() if c}
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> Polynomial:
        f = self.ring.field
        c = f.coerce(c)
        if not c:
            return self.ring.zero()
        p = f.characteristic
        if p:
            return Polynomial(self.ring, {e: v * c % p for e, v in self._d.items()})
        return Polynomial(self.ring, {e: v * c for e, v in self._d.items()})

    def mul_monomial(self, exps: tuple) -> Polynomial:
        return Polynomial(
            self.ring, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._d.items()}
        )

    def monic(self) -> Polynomial:
        lt = self.leading_term()
        if lt is None:
            return self
        return self.scale(self.ring.field.inv(lt[1]))

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {e: c for e, c in self._d.items() if sum(e) == d})

    def constant_part(self) -> Polynomial:
        return self.homogeneous_part(0)

    # -- comparison, hashing, printing ---------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._d == self.ring.const(other)._d
        return NotImplemented

    def __lt__(self, other):
        # total order on polynomials by their descending term lists; used only
        # for deterministic sorting
        if not isinstance(other, Polynomial):
            return NotImplemented
        a = [(grevlex_key(e), str(c)) for e, c in self.terms()]
        b = [(grevlex_key(e), str(c)) for e, c in other.terms()]
        return a < b

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._d:
            return "0"
        f = self.ring.field
        names = self.ring.variables
        out = []
        for e, c in self.terms():
            s = f.format(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if mono:
                body = mono if s == "1" else f"{s}*{mono}"
            else:
                body = s
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)
