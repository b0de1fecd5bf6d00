"""Seeded random ideals for tests and benchmarks.

All randomness comes from ``random.Random(seed)``, so a parameter set and a
seed pin down the generated corpus exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .polyring import PolyRing


@dataclass(frozen=True)
class IdealParams:
    r: int = 3
    s: int = 2
    max_degree: int = 3
    coeff_bound: int = 3
    density: int = 4  # maximum number of terms per generator
    characteristic: int = 0


def _monomials(r, max_degree):
    return [e for e in itertools.product(range(max_degree + 1), repeat=r) if sum(e) <= max_degree]


def random_poly(ring, rng, max_degree=3, coeff_bound=3, density=4, nonzero=True):
    monos = _monomials(ring.nvars, max_degree)
    while True:
        n = rng.randint(1, density)
        terms = {}
        for e in rng.sample(monos, min(n, len(monos))):
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[e] = c
        f = ring.from_dict(terms)
        if f or not nonzero:
            return f


def random_ideal(params, seed):
    """``(ring, generators)`` drawn from the given parameters."""
    rng = random.Random(seed)
    ring = PolyRing.standard(params.r, params.characteristic)
    gens = [
        random_poly(ring, rng, params.max_degree, params.coeff_bound, params.density)
        for _ in range(params.s)
    ]
    return ring, gens


def torus_point_ideal(params, seed):
    """Generators vanishing at a random point with nonzero coordinates.

    Returns ``(ring, generators, point)``; such an ideal contains no monomial.
    """
    rng = random.Random(seed)
    ring = PolyRing.standard(params.r, params.characteristic)
    p = params.characteristic
    if p:
        point = [rng.randint(1, p - 1) for _ in range(params.r)]
    else:
        point = [rng.choice([-1, 1]) * rng.randint(1, params.coeff_bound) for _ in range(params.r)]
    gens = []
    for _ in range(params.s):
        f = random_poly(ring, rng, params.max_degree, params.coeff_bound, params.density)
        c = f.evaluate(point)
        f = f - ring.const(c)
        if not f:
            f = ring.var(1) - ring.const(point[0])
        gens.append(f)
    return ring, gens, tuple(point)


def corpus(params, count, seed=0):
    """``count`` ideals with consecutive seeds starting at ``seed``."""
    return [random_ideal(params, seed + n) for n in range(count)]
