"""Seeded random instances run through the suite.

Every theorem-forced verdict is an oracle: a false one is an implementation
bug.  Generation uses its own ``random.Random(seed)`` so a seed fixes the
whole report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import Field, PolyRing
from .conjectures import InstanceSpec
from .groebner import Ideal
from .instance import format_instance
from .runner import Options, run_command

VARS = "xyzw"


@dataclass(frozen=True)
class Profile:
    name: str
    characteristic: int
    max_vars: int = 4
    max_gens: int = 5
    min_degree: int = 1
    max_degree: int = 3
    max_terms: int = 3
    coeff_bound: int = 9


PROFILES = {
    "default": Profile("default", 32003),
    "qq": Profile("qq", 0, max_vars=3, max_gens=4),
    "degree0": Profile("degree0", 32003, max_vars=3, max_gens=3, min_degree=0),
}


def _monomial(rng, n, deg):
    e = [0] * n
    for _ in range(deg):
        e[rng.randrange(n)] += 1
    return tuple(e)


def random_ideal(rng: random.Random, prof: Profile) -> Ideal:
    n = rng.randint(2, prof.max_vars)
    ring = PolyRing(list(VARS[:n]), Field(prof.characteristic))
    gens = []
    for _ in range(rng.randint(1, prof.max_gens)):
        deg = rng.randint(prof.min_degree, prof.max_degree)
        f = ring.zero()
        for _ in range(rng.randint(1, prof.max_terms)):
            c = rng.randint(1, prof.coeff_bound) * rng.choice((1, -1))
            f = f + ring.monomial(_monomial(rng, n, deg), c)
        gens.append(f)
    return Ideal(ring, gens)


def generate(seed: int, count: int, profile: str = "default"):
    prof = PROFILES[profile]
    rng = random.Random(seed)
    out = []
    for k in range(count):
        I = random_ideal(rng, prof)
        spec = InstanceSpec(I.ring, instance_id=f"fuzz-{seed}-{k:03d}")
        spec.ideals["I"] = I
        out.append(spec)
    return out


def fuzz(seed: int, count: int, profile: str = "default", opts: Options | None = None):
    """Returns ``(instance_specs, checks, skipped)``."""
    if profile not in PROFILES:
        raise ValueError(f"unknown fuzz profile {profile!r}; choose from {sorted(PROFILES)}")
    opts = opts or Options(seed=seed)
    specs = generate(seed, count, profile)
    checks, skipped = [], []
    for spec in specs:
        res = run_command(spec, "suite", opts)
        checks += res.reports
        skipped += res.skipped
    return specs, checks, skipped


def instance_texts(specs) -> dict:
    return {s.instance_id: format_instance(s) for s in specs}
