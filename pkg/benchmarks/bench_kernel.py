"""Compiled vs pure-Python reduction kernel on a few Groebner/resolution workloads.

    python3 benchmarks/bench_kernel.py [--repeat N]

Both kernels must produce identical reduced bases and Betti tables; the
script aborts if they do not.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from oideal import Field, Ideal, PolyRing, kernel
from oideal.algebra import monomials_of_degree
from oideal.modsyz import Presentation
from oideal.resolution import betti_table, minimal_free_resolution

P = Field(32003)


def _cyclic(n):
    """Homogenized cyclic-n system in n + 1 variables."""
    R = PolyRing([f"x{i}" for i in range(n)] + ["h"], P)
    *x, h = R.gens()
    out = []
    for k in range(1, n):
        s = R.zero()
        for i in range(n):
            m = R.one()
            for j in range(k):
                m = m * x[(i + j) % n]
            s = s + m
        out.append(s)
    m = R.one()
    for v in x:
        m = m * v
    return Ideal(R, out + [m - h ** n])


def _dense_cubics(count, seed=5):
    rng = random.Random(seed)
    R = PolyRing("xyzw", P)
    mons = monomials_of_degree(4, 3)
    return Ideal(R, [sum((R.monomial(m, rng.randint(1, 100)) for m in mons), R.zero()) for _ in range(count)])


def _workloads():
    R = PolyRing("abcd", P)
    a, b, c, d = R.gens()
    quartic = Ideal(R, [b * c - a * d, b ** 3 - a ** 2 * c, c ** 3 - b * d ** 2, a * c ** 2 - b ** 2 * d])

    def resolve(I):
        return betti_table(minimal_free_resolution(Presentation.cyclic(I))).to_json()

    return {
        "cyclic-5 gb": lambda: _cyclic(5).gb().elements,
        "cyclic-6 gb": lambda: _cyclic(6).gb().elements,
        "dense cubics gb": lambda: _dense_cubics(4).gb().elements,
        "quartic resolution": lambda: resolve(quartic),
        "3 cubics resolution": lambda: resolve(_dense_cubics(3)),
    }


def _time(fn, repeat):
    out, ts = None, []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        ts.append(time.perf_counter() - t)
    return out, statistics.median(ts)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not kernel.HAVE_COMPILED:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'workload':<22}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, fn in _workloads().items():
        kernel.use_compiled(False)
        ref, tp = _time(fn, args.repeat)
        if kernel.HAVE_COMPILED:
            kernel.use_compiled(True)
            got, tc = _time(fn, args.repeat)
            if got != ref:
                raise SystemExit(f"{name}: kernels disagree")
            print(f"{name:<22}{tp:>10.3f}{tc:>12.3f}{tp / tc:>8.1f}x")
        else:
            print(f"{name:<22}{tp:>10.3f}{'-':>12}{'-':>9}")
    kernel.use_compiled(True)


if __name__ == "__main__":
    main()
