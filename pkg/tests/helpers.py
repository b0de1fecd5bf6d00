"""Random inputs shared by the unit, property and acceptance tests."""

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from monocheck.funcfield import dense_poly, embed, make_monic, minimal_polynomial
from monocheck.polyring import PolyRing, exact_quotient, remainder
from monocheck.systems import FactorList, SemiTriSystem


def example_ring():
    return PolyRing.standard(4)


def example_generators(ring=None):
    ring = ring or example_ring()
    T1, T2, T3, T4 = ring.gens()
    return (T3 - T1) * (T3 - T2) * T2, (T1 + T2 - T3) * T4


EXAMPLE_TEXT = "vars T1,T2,T3,T4\n(T3-T1)*(T3-T2)*T2\n(T1+T2-T3)*T4\n"


# ---------------------------------------------------------------------------
# hypothesis strategies


@st.composite
def polys(draw, ring, max_degree=3, max_terms=5, low=1, coeff=5):
    """Polynomials in T_low..T_r with small integer coefficients."""
    r = ring.nvars
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = [0] * r
        for i in range(low - 1, r):
            e[i] = draw(st.integers(0, max_degree))
        while sum(e) > max_degree:
            k = max(range(r), key=lambda i: e[i])
            e[k] -= 1
        terms[tuple(e)] = draw(st.integers(-coeff, coeff))
    return ring.from_dict(terms)


def nonzero(strategy):
    return strategy.filter(bool)


# ---------------------------------------------------------------------------
# seeded generators (plain random.Random, used where hypothesis would be slow)


def rand_poly(ring, rng, max_degree=3, max_terms=4, low=1, coeff=3, nonzero=False):
    r = ring.nvars
    vs = list(range(low - 1, r))
    monos = [
        e for e in itertools.product(range(max_degree + 1), repeat=len(vs)) if sum(e) <= max_degree
    ]
    while True:
        terms = {}
        for m in rng.sample(monos, min(len(monos), rng.randint(1, max_terms))):
            e = [0] * r
            for v, x in zip(vs, m):
                e[v] = x
            terms[tuple(e)] = rng.randint(-coeff, coeff)
        f = ring.from_dict(terms)
        if f or not nonzero:
            return f


def rand_in_var(ring, rng, i, deg, max_degree=3, coeff=3):
    """A polynomial of degree exactly ``deg`` in T_i and free of T_1..T_{i-1}."""
    while True:
        f = ring.zero()
        for n in range(deg + 1):
            c = rand_poly(ring, rng, max_degree=max(0, max_degree - n), max_terms=2, low=i + 1, coeff=coeff)
            if n == deg and not c:
                c = ring.one()
            f = f + c * ring.var(i, n) if n else f + c
        if f.deg_in(i) == deg:
            return f


def rand_system(ring, rng, k=None, n_unsorted=None):
    """A valid semi-triangular system with random progress index."""
    r = ring.nvars
    k = rng.randint(0, r - 1) if k is None else k
    factors = [ring.var(i) for i in range(1, r + 1) if rng.random() < 0.6]
    tri = []
    for piv in range(1, k + 1):
        if rng.random() < 0.5:
            f = rand_in_var(ring, rng, piv, rng.randint(1, 2))
            factors.append(f.lc_in(piv))
            tri.append(f)
    n = rng.randint(0, 3) if n_unsorted is None else n_unsorted
    unsorted = [rand_poly(ring, rng, low=k + 1, nonzero=True) for _ in range(n)] if k < r else []
    return SemiTriSystem.build(ring, unsorted, tri, k, FactorList.of(factors))


def _nonconstant(ring, rng, low):
    while True:
        f = rand_poly(ring, rng, low=low)
        if not f.is_constant():
            return f


def f5_ring(rng):
    return PolyRing.standard(rng.randint(1, 3), 5)


# -- applicable arguments for each rewriting operation ----------------------


def case_split_args(rng):
    ring = f5_ring(rng)
    S = rand_system(ring, rng, k=rng.randint(0, ring.nvars - 1))
    low = S.k + 1
    if rng.random() < 0.3 and S.ineq.factors:
        # a factor of g already divides f*g
        return S, rand_poly(ring, rng, max_degree=2, low=low), [rng.choice(S.ineq.factors)]
    q = rand_poly(ring, rng, max_degree=2, max_terms=2, low=low, nonzero=True)
    return S, q * rand_poly(ring, rng, max_degree=1, low=low), [q]


def division_args(rng):
    ring = f5_ring(rng)
    k = rng.randint(0, ring.nvars - 1)
    S = rand_system(ring, rng, k=k, n_unsorted=rng.randint(0, 2))
    i = k + 1
    h = rand_in_var(ring, rng, i, rng.randint(1, 2))
    f = rand_poly(ring, rng, low=i, nonzero=True)
    S = S.replace(unsorted=S.unsorted + (f, h), ineq=S.ineq.times(h.lc_in(i)))
    f, h = f.primitive(), h.primitive()
    if f == h or f not in S.unsorted or h not in S.unsorted or f.is_constant():
        return None
    return S, f, h


def advance_args(rng):
    ring = f5_ring(rng)
    k = rng.randint(0, ring.nvars - 1)
    S = rand_system(ring, rng, k=k, n_unsorted=0)
    extra = [_nonconstant(ring, rng, k + 2) for _ in range(rng.randint(0, 2))] if k + 2 <= ring.nvars else []
    return S.replace(unsorted=extra)


def sort_args(rng):
    ring = f5_ring(rng)
    k = rng.randint(0, ring.nvars - 1)
    S = rand_system(ring, rng, k=k, n_unsorted=0)
    f = rand_in_var(ring, rng, k + 1, rng.randint(1, 2))
    rest = [_nonconstant(ring, rng, k + 2) for _ in range(rng.randint(0, 1))] if k + 2 <= ring.nvars else []
    S = S.replace(unsorted=rest + [f], ineq=S.ineq.times(f.lc_in(k + 1)))
    return S, f.primitive()


def last_poly_args(rng):
    ring = f5_ring(rng)
    k = rng.randint(0, ring.nvars - 1)
    S = rand_system(ring, rng, k=k, n_unsorted=0)
    f = rand_in_var(ring, rng, k + 1, rng.randint(1, 3))
    rest = [_nonconstant(ring, rng, k + 2) for _ in range(rng.randint(0, 1))] if k + 2 <= ring.nvars else []
    S = S.replace(unsorted=rest + [f])
    return S, f.primitive()


def brute_points(ring, equations, ineq_factors):
    """Independent point enumeration over F_p using plain integer arithmetic."""
    p = ring.characteristic
    out = set()

    def ev(f, x):
        total = 0
        for e, c in f.terms:
            v = int(c)
            for xi, n in zip(x, e):
                v = v * pow(xi, n, p) % p
            total = (total + v) % p
        return total

    for x in itertools.product(range(p), repeat=ring.nvars):
        if all(ev(f, x) == 0 for f in equations) and all(ev(h, x) for h in ineq_factors):
            out.add(x)
    return out


def seeded(seed):
    return random.Random(seed)


# ---------------------------------------------------------------------------
# random monic dense quotient rings and independent minimal-polynomial checks


def random_monic_system(rng, max_dim=27, max_params=1):
    """Monic triangular generators in T_1..T_s over K[T_{s+1}..T_r].

    The pivots come first in the variable order, so the lex leading term of
    every generator is its pivot power and the generators form a Groebner
    basis; plain multivariate division then decides membership.
    """
    s = rng.randint(1, 3)
    while True:
        degrees = [rng.randint(1, 3 if s == 3 else 5) for _ in range(s)]
        dim = 1
        for d in degrees:
            dim *= d
        if dim <= max_dim:
            break
    nparams = rng.randint(0, max_params)
    ring = PolyRing.standard(s + nparams)
    params = range(s + 1, s + nparams + 1)
    gens = []
    for i in range(s):
        f = ring.var(i + 1, degrees[i])
        for _ in range(rng.randint(1, 3)):
            mono = [0] * ring.nvars
            mono[i] = rng.randint(0, degrees[i] - 1)
            for j in range(i + 1, s):
                mono[j] = rng.randint(0, degrees[j] - 1)
            c = ring.const(rng.randint(-3, 3))
            for p in params:
                if rng.random() < 0.5:
                    c = c + rng.randint(-2, 2) * ring.var(p)
            f = f + c * ring.monomial(mono)
        gens.append(f)
    return ring, gens, degrees


def random_element(ring, rng, s):
    return rand_poly(ring, rng, max_degree=2, max_terms=3, coeff=3)


def annihilates_by_division(mp, g, gens):
    """p(g) lies in <gens>, checked by Horner over K[T] with remainders.

    The coefficients of p are cleared to polynomials first.
    """
    field = mp.field
    fracs = [field.as_fraction(c) for c in mp.coeffs]
    den = g.ring.one()
    for _, d in fracs:
        if exact_quotient(den, d) is None:
            den = den * d
    acc = g.ring.zero()
    for num, d in reversed(fracs):
        acc = remainder(acc * g + num * exact_quotient(den, d), gens)
    return not acc


def specialized_rank(g, gens, degrees, m, rng, tries=3):
    """Rank of the coordinate vectors of g^0..g^(m-1) in K[T]/<gens> after
    substituting random values for the parameters, with Fraction
    elimination. A full rank at one point proves independence over L."""
    ring = g.ring
    s = len(degrees)
    basis = list(itertools.product(*(range(d) for d in degrees)))
    best = 0
    for _ in range(tries):
        values = {p: rng.randint(5, 500) for p in range(s + 1, ring.nvars + 1)}
        gs = [f.substitute(values) for f in gens]
        gv = g.substitute(values)
        rows = []
        cur = ring.one()
        for _ in range(m):
            coords = {e[:s]: Fraction(int(c.numerator), int(c.denominator)) for e, c in cur.terms}
            rows.append([coords.get(b, Fraction(0)) for b in basis])
            cur = remainder(cur * gv, gs)
        best = max(best, _rank(rows))
        if best == m:
            break
    return best


def _rank(rows):
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                q = rows[i][col] / rows[rank][col]
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def monic_ring_case(seed):
    """One criterion case: returns ``(annihilates, independent, dim, degree)``."""
    rng = random.Random(seed)
    ring, gens, degrees = random_monic_system(rng)
    S = SemiTriSystem.build(ring, [], gens, ring.nvars, [])
    R = make_monic(embed(S))
    g = random_element(ring, rng, len(degrees))
    gel = R.normal_form(dense_poly(g, R.field))
    mp = minimal_polynomial(gel, R)
    ok_ring = R.is_zero(mp.evaluate_at(gel, R))
    ok_div = annihilates_by_division(mp, g, gens)
    rank = specialized_rank(g, gens, degrees, mp.degree, rng)
    return ok_ring and ok_div, rank == mp.degree, R.dim, mp.degree
