"""Pure-Python reduction store (fallback for the compiled kernel).

Vectors are pairs ``(keys, coeffs)`` of parallel lists, keys strictly
descending.  Coefficients are ints mod p (p > 0) or Fractions (p == 0).
"""

from __future__ import annotations

from operator import le


def sub_shifted(fk, fc, i0, gk, gc, delta, c, p):
    """Return ``f[i0:] - c * x^delta * g`` as new lists."""
    ok = []
    oc = []
    append_k = ok.append
    append_c = oc.append
    i, j = i0, 0
    nf, ng = len(fk), len(gk)
    if p:
        while i < nf and j < ng:
            a = fk[i]
            b = gk[j] + delta
            if a > b:
                append_k(a)
                append_c(fc[i])
                i += 1
            elif a < b:
                append_k(b)
                append_c(-c * gc[j] % p)
                j += 1
            else:
                v = (fc[i] - c * gc[j]) % p
                if v:
                    append_k(a)
                    append_c(v)
                i += 1
                j += 1
        while j < ng:
            append_k(gk[j] + delta)
            append_c(-c * gc[j] % p)
            j += 1
    else:
        while i < nf and j < ng:
            a = fk[i]
            b = gk[j] + delta
            if a > b:
                append_k(a)
                append_c(fc[i])
                i += 1
            elif a < b:
                append_k(b)
                append_c(-c * gc[j])
                j += 1
            else:
                v = fc[i] - c * gc[j]
                if v:
                    append_k(a)
                    append_c(v)
                i += 1
                j += 1
        while j < ng:
            append_k(gk[j] + delta)
            append_c(-c * gc[j])
            j += 1
    if i < nf:
        ok.extend(fk[i:])
        oc.extend(fc[i:])
    return ok, oc


class PyStore:
    """Monic basis vectors indexed by insertion order, with divisor lookup."""

    compiled = False

    def __init__(self, order, p: int):
        self.order = order
        self.p = p
        self.keys = []
        self.coeffs = []
        self.lt_comp = []
        self.lt_exps = []
        self.active = []
        self._by_comp = {}

    def __len__(self):
        return len(self.keys)

    def add(self, keys, coeffs) -> int:
        p = self.p
        lc = coeffs[0]
        if p:
            if lc != 1:
                inv = pow(lc, -1, p)
                coeffs = [c * inv % p for c in coeffs]
        elif lc != 1:
            coeffs = [c / lc for c in coeffs]
        idx = len(self.keys)
        comp, exps = self.order.decode(keys[0])
        self.keys.append(list(keys))
        self.coeffs.append(list(coeffs))
        self.lt_comp.append(comp)
        self.lt_exps.append(exps)
        self.active.append(True)
        self._by_comp.setdefault(comp, []).append(idx)
        return idx

    def get(self, i):
        return list(self.keys[i]), list(self.coeffs[i])

    def set_active(self, i, flag: bool):
        if self.active[i] == flag:
            return
        self.active[i] = flag
        lst = self._by_comp[self.lt_comp[i]]
        if flag:
            lst.append(i)
            lst.sort()
        else:
            lst.remove(i)

    def find_divisor(self, key, strategy: int = 0) -> int:
        comp, exps = self.order.decode(key)
        cands = self._by_comp.get(comp)
        if not cands:
            return -1
        lt_exps = self.lt_exps
        seq = cands if strategy == 0 else reversed(cands)
        for j in seq:
            if all(map(le, lt_exps[j], exps)):
                return j
        return -1

    def reduce(self, keys, coeffs, full: bool = True, strategy: int = 0):
        p = self.p
        fk, fc = keys, coeffs
        rk, rc = [], []
        i = 0
        while i < len(fk):
            t = fk[i]
            j = self.find_divisor(t, strategy)
            if j < 0:
                if not full:
                    return fk[i:], fc[i:]
                rk.append(t)
                rc.append(fc[i])
                i += 1
                continue
            gk = self.keys[j]
            fk, fc = sub_shifted(fk, fc, i, gk, self.coeffs[j], t - gk[0], fc[i], p)
            i = 0
        return rk, rc

    def spoly(self, i, j, lcm_key):
        """S-vector of elements i and j (both monic) at the common multiple ``lcm_key``."""
        ak, ac = self.keys[i], self.coeffs[i]
        bk, bc = self.keys[j], self.coeffs[j]
        da = lcm_key - ak[0]
        db = lcm_key - bk[0]
        fk = [k + da for k in ak[1:]]
        fc = list(ac[1:])
        return sub_shifted(fk, fc, 0, bk[1:], bc[1:], db, 1, self.p) if len(bk) > 1 else (fk, fc)

    def spoly_reduce(self, i, j, lcm_key, full: bool = True, strategy: int = 0):
        fk, fc = self.spoly(i, j, lcm_key)
        return self.reduce(fk, fc, full, strategy)
