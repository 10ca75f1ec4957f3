# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled reduction store for prime fields.

Same interface as :class:`oideal._pykernel.PyStore`; keys are 64-bit ints and
coefficients are residues mod p < 2^31, so all products fit in 64 bits.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

ctypedef long long i64


cdef struct Vec:
    i64* k
    i64* c
    Py_ssize_t n


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef class CStore:
    cdef public object order
    cdef public i64 p
    cdef int nvars
    cdef i64 C
    cdef i64 B
    cdef i64 Bn
    cdef i64* base
    cdef Vec* vecs
    cdef int* lt_exps
    cdef int* lt_comp
    cdef char* active
    cdef Py_ssize_t size
    cdef Py_ssize_t cap
    cdef list by_comp
    cdef int* tmp_exps
    # scratch buffers for reduction
    cdef i64* fk
    cdef i64* fc
    cdef i64* gk
    cdef i64* gc
    cdef i64* rk
    cdef i64* rc
    cdef Py_ssize_t fcap
    cdef Py_ssize_t gcap
    cdef Py_ssize_t rcap

    compiled = True

    def __cinit__(self, order, p):
        cdef Py_ssize_t i
        self.order = order
        self.p = p
        n, B, Bn, C, base = order.kernel_params()
        self.nvars = n
        self.B = B
        self.Bn = Bn
        self.C = C
        self.base = <i64*> malloc(max(len(base), 1) * sizeof(i64))
        for i in range(len(base)):
            self.base[i] = base[i]
        self.cap = 16
        self.size = 0
        self.vecs = <Vec*> malloc(self.cap * sizeof(Vec))
        self.lt_exps = <int*> malloc(self.cap * max(n, 1) * sizeof(int))
        self.lt_comp = <int*> malloc(self.cap * sizeof(int))
        self.active = <char*> malloc(self.cap * sizeof(char))
        self.tmp_exps = <int*> malloc(max(n, 1) * sizeof(int))
        self.by_comp = [[] for _ in range(C)]
        self.fcap = self.gcap = self.rcap = 64
        self.fk = <i64*> malloc(self.fcap * sizeof(i64))
        self.fc = <i64*> malloc(self.fcap * sizeof(i64))
        self.gk = <i64*> malloc(self.gcap * sizeof(i64))
        self.gc = <i64*> malloc(self.gcap * sizeof(i64))
        self.rk = <i64*> malloc(self.rcap * sizeof(i64))
        self.rc = <i64*> malloc(self.rcap * sizeof(i64))

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.vecs != NULL:
            for i in range(self.size):
                free(self.vecs[i].k)
                free(self.vecs[i].c)
            free(self.vecs)
        free(self.base)
        free(self.lt_exps)
        free(self.lt_comp)
        free(self.active)
        free(self.tmp_exps)
        free(self.fk)
        free(self.fc)
        free(self.gk)
        free(self.gc)
        free(self.rk)
        free(self.rc)

    def __len__(self):
        return self.size

    cdef inline int _decode(self, i64 key, int* exps):
        cdef i64 C = self.C
        cdef int comp = <int> (C - 1 - key % C)
        cdef i64 rest = key // C - self.base[comp]
        cdef i64 deg = (rest + self.Bn - 1) // self.Bn
        cdef i64 s = deg * self.Bn - rest
        cdef int i
        for i in range(self.nvars):
            exps[i] = <int> (s % self.B)
            s = s // self.B
        return comp

    cdef void _grow(self):
        cdef Py_ssize_t n = max(self.nvars, 1)
        self.cap *= 2
        self.vecs = <Vec*> realloc(self.vecs, self.cap * sizeof(Vec))
        self.lt_exps = <int*> realloc(self.lt_exps, self.cap * n * sizeof(int))
        self.lt_comp = <int*> realloc(self.lt_comp, self.cap * sizeof(int))
        self.active = <char*> realloc(self.active, self.cap * sizeof(char))

    def add(self, keys, coeffs):
        cdef Py_ssize_t m = len(keys), i
        cdef i64 p = self.p, inv
        if self.size == self.cap:
            self._grow()
        cdef Vec v
        v.n = m
        v.k = <i64*> malloc(max(m, 1) * sizeof(i64))
        v.c = <i64*> malloc(max(m, 1) * sizeof(i64))
        inv = _inv(coeffs[0], p)
        for i in range(m):
            v.k[i] = keys[i]
            v.c[i] = (<i64> coeffs[i]) * inv % p
        cdef Py_ssize_t idx = self.size
        self.vecs[idx] = v
        cdef int comp = self._decode(v.k[0], &self.lt_exps[idx * max(self.nvars, 1)])
        self.lt_comp[idx] = comp
        self.active[idx] = 1
        self.by_comp[comp].append(idx)
        self.size += 1
        return idx

    def get(self, Py_ssize_t i):
        cdef Vec v = self.vecs[i]
        cdef Py_ssize_t j
        return [v.k[j] for j in range(v.n)], [v.c[j] for j in range(v.n)]

    def set_active(self, Py_ssize_t i, flag):
        cdef char f = 1 if flag else 0
        if self.active[i] == f:
            return
        self.active[i] = f
        lst = self.by_comp[self.lt_comp[i]]
        if f:
            lst.append(i)
            lst.sort()
        else:
            lst.remove(i)

    cdef Py_ssize_t _find(self, i64 key, int strategy):
        cdef int comp = self._decode(key, self.tmp_exps)
        cdef list cands = self.by_comp[comp]
        cdef Py_ssize_t m = len(cands), t, j
        cdef int v, nv = self.nvars
        cdef int stride = max(nv, 1)
        cdef int* e
        cdef bint ok
        for t in range(m):
            j = cands[t] if strategy == 0 else cands[m - 1 - t]
            e = &self.lt_exps[j * stride]
            ok = True
            for v in range(nv):
                if e[v] > self.tmp_exps[v]:
                    ok = False
                    break
            if ok:
                return j
        return -1

    def find_divisor(self, key, strategy=0):
        return self._find(key, strategy)

    cdef void _ensure(self, Py_ssize_t need, int which):
        cdef Py_ssize_t c
        if which == 0 and need > self.fcap:
            c = max(need, 2 * self.fcap)
            self.fk = <i64*> realloc(self.fk, c * sizeof(i64))
            self.fc = <i64*> realloc(self.fc, c * sizeof(i64))
            self.fcap = c
        elif which == 1 and need > self.gcap:
            c = max(need, 2 * self.gcap)
            self.gk = <i64*> realloc(self.gk, c * sizeof(i64))
            self.gc = <i64*> realloc(self.gc, c * sizeof(i64))
            self.gcap = c
        elif which == 2 and need > self.rcap:
            c = max(need, 2 * self.rcap)
            self.rk = <i64*> realloc(self.rk, c * sizeof(i64))
            self.rc = <i64*> realloc(self.rc, c * sizeof(i64))
            self.rcap = c

    cdef Py_ssize_t _sub(self, Py_ssize_t nf, Py_ssize_t i0, Vec g, Py_ssize_t j0, i64 delta, i64 c):
        """g-buffer := f[i0:nf] - c * x^delta * g[j0:]; swaps into f; returns new length."""
        cdef i64 p = self.p
        cdef Py_ssize_t ng = g.n
        self._ensure(nf - i0 + ng - j0, 1)
        cdef i64* fk = self.fk
        cdef i64* fc = self.fc
        cdef i64* ok = self.gk
        cdef i64* oc = self.gc
        cdef Py_ssize_t i = i0, j = j0, o = 0
        cdef i64 a, b, v
        while i < nf and j < ng:
            a = fk[i]
            b = g.k[j] + delta
            if a > b:
                ok[o] = a
                oc[o] = fc[i]
                o += 1
                i += 1
            elif a < b:
                ok[o] = b
                v = (p - c * g.c[j] % p) % p
                oc[o] = v
                o += 1
                j += 1
            else:
                v = (fc[i] - c * g.c[j] % p) % p
                if v < 0:
                    v += p
                if v:
                    ok[o] = a
                    oc[o] = v
                    o += 1
                i += 1
                j += 1
        while j < ng:
            ok[o] = g.k[j] + delta
            oc[o] = (p - c * g.c[j] % p) % p
            o += 1
            j += 1
        while i < nf:
            ok[o] = fk[i]
            oc[o] = fc[i]
            o += 1
            i += 1
        # swap f and g buffers
        self.fk, self.gk = self.gk, self.fk
        self.fc, self.gc = self.gc, self.fc
        self.fcap, self.gcap = self.gcap, self.fcap
        return o

    cdef tuple _reduce_buf(self, Py_ssize_t nf, bint full, int strategy):
        cdef Py_ssize_t i = 0, nr = 0, j, t
        cdef i64 key
        cdef Vec g
        while i < nf:
            key = self.fk[i]
            j = self._find(key, strategy)
            if j < 0:
                if not full:
                    return [self.fk[t] for t in range(i, nf)], [self.fc[t] for t in range(i, nf)]
                self._ensure(nr + 1, 2)
                self.rk[nr] = key
                self.rc[nr] = self.fc[i]
                nr += 1
                i += 1
                continue
            g = self.vecs[j]
            nf = self._sub(nf, i, g, 0, key - g.k[0], self.fc[i])
            i = 0
        return [self.rk[t] for t in range(nr)], [self.rc[t] for t in range(nr)]

    def reduce(self, keys, coeffs, full=True, strategy=0):
        cdef Py_ssize_t m = len(keys), i
        cdef i64 p = self.p
        self._ensure(m, 0)
        for i in range(m):
            self.fk[i] = keys[i]
            self.fc[i] = (<i64> coeffs[i]) % p
        return self._reduce_buf(m, full, strategy)

    cdef Py_ssize_t _spoly_buf(self, Py_ssize_t a, Py_ssize_t b, i64 lcm_key):
        cdef Vec va = self.vecs[a]
        cdef Vec vb = self.vecs[b]
        cdef i64 da = lcm_key - va.k[0]
        cdef i64 db = lcm_key - vb.k[0]
        cdef Py_ssize_t i, nf = va.n - 1
        self._ensure(nf, 0)
        for i in range(nf):
            self.fk[i] = va.k[i + 1] + da
            self.fc[i] = va.c[i + 1]
        if vb.n > 1:
            nf = self._sub(nf, 0, vb, 1, db, 1)
        return nf

    def spoly(self, Py_ssize_t i, Py_ssize_t j, lcm_key):
        cdef Py_ssize_t nf = self._spoly_buf(i, j, lcm_key), t
        return [self.fk[t] for t in range(nf)], [self.fc[t] for t in range(nf)]

    def spoly_reduce(self, Py_ssize_t i, Py_ssize_t j, lcm_key, full=True, strategy=0):
        cdef Py_ssize_t nf = self._spoly_buf(i, j, lcm_key)
        return self._reduce_buf(nf, full, strategy)
