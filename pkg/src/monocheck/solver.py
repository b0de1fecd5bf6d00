"""Solvability of triangular systems and the monomial containment test.

A triangular system ``(F, g)`` with nonzero g has a solution outside V(g)
exactly when g is not nilpotent in the monic quotient ring R obtained from
it, i.e. when the minimal polynomial of g over the function field of the
non-pivot variables is not a power of X.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import ContractError
from .funcfield import MinPoly, annihilator, embed, make_monic, monic
from .polyring import PolyRing
from .stats import COUNTERS
from .systems import FactorList, SemiTriSystem, is_triangular
from .triangulate import Budget, TraceRecord, Verdict, make_triangular


def is_monomial_poly(p):
    """True if p (a MinPoly or coefficient list, low to high) is c*X^m."""
    coeffs = p.coeffs if isinstance(p, MinPoly) else tuple(p)
    nz = [t for t, c in enumerate(coeffs) if c.num]
    if not nz:
        raise ContractError("the zero polynomial is not a minimal polynomial")
    return len(nz) == 1


@dataclass
class Solvability:
    solvable: bool
    minpoly: MinPoly = None
    ring: object = None
    reason: str = ""


def _exact_check(S, budget):
    E = embed(S)
    R = make_monic(E, budget)
    g = R.one()
    for factor in E.ineq:
        g = R.mul(g, R.normal_form(factor))
        if R.is_zero(g):
            break
    coeffs = annihilator(g, R, budget)
    mp = MinPoly(R.field, monic(coeffs, R.field))
    return Solvability(not is_monomial_poly(coeffs), mp, R)


def specialize(S, values):
    """The fibre of S over a parameter point, or None if the point makes a
    leading coefficient or the inequation vanish identically."""
    tri = []
    for f in S.triangular:
        k = f.lowest_variable()
        fa = f.substitute(values)
        if fa.lowest_variable() != k or fa.deg_in(k) != f.deg_in(k):
            return None
        if not fa.lc_in(k):
            return None
        tri.append(fa)
    factors = []
    for h in S.ineq:
        ha = h.substitute(values)
        if not ha:
            return None
        factors.append(ha)
    return SemiTriSystem(S.ring, (), tuple(tri), S.k, FactorList.of(factors))


def _sample_points(S, params, tries):
    """Parameter values of small magnitude first: coefficient size of the
    fibre grows with the values' height."""
    p = S.ring.characteristic
    rng = random.Random(len(params) * 7919 + S.ring.nvars)
    for t in range(tries):
        bound = 2 + 3 * t
        if p:
            yield {i: rng.randint(1, p - 1) for i in params}
        else:
            yield {i: rng.choice((-1, 1)) * rng.randint(1, bound) for i in params}


def check_triangular(S, budget=None, specialize_first=True, tries=2):
    """Decide whether the triangular system S has a solution.

    With ``specialize_first`` the parameters (non-pivot variables) are first
    set to a few sample values: a solution of such a fibre is a solution of
    S, so a solvable fibre settles the question without computing over the
    function field. Otherwise, and always when the shortcut is disabled, the
    minimal polynomial of g over the function field decides; it is kept in
    the result.
    """
    if not is_triangular(S):
        raise ContractError("solvability is only defined for triangular systems")
    if S.is_dead():
        return Solvability(False, reason="constant")
    if specialize_first:
        pivots = {f.lowest_variable() for f in S.triangular}
        params = [i for i in range(1, S.r + 1) if i not in pivots]
        if params:
            for values in _sample_points(S, params, tries):
                fibre = specialize(S, values)
                if fibre is not None and _exact_check(fibre, budget).solvable:
                    return Solvability(True, reason="fibre")
    return _exact_check(S, budget)


def is_solvable(S, budget=None, specialize_first=True):
    return check_triangular(S, budget, specialize_first).solvable


@dataclass
class Options:
    eager: bool = True
    jobs: int = 1
    timeout: float = None
    max_systems: int = None
    torus_vars: tuple = None
    lazy: bool = True
    validate: bool = False
    expand_g: bool = False
    # shortcuts beyond the literal algorithm; None follows ``eager``
    specialize: bool = None  # try parameter fibres before the symbolic check
    strip: bool = None  # divide unsorted members by factors of g

    def shortcut(self, name):
        value = getattr(self, name)
        return self.eager if value is None else value


@dataclass
class Outcome:
    answer: bool
    systems_examined: int
    counters: dict = field(default_factory=dict)
    witness: SemiTriSystem = None


def _as_ring(generators, r):
    if isinstance(r, PolyRing):
        return r
    if generators:
        ring = generators[0].ring
        if r is not None and r != ring.nvars:
            raise ValueError(f"r={r} but the generators live in {ring.nvars} variables")
        return ring
    if r is None:
        raise ValueError("need r or a ring when there are no generators")
    return PolyRing.standard(r)


def decide(generators, r=None, options=None, tracer=None, **kw):
    """Full run of the monomial test; returns an :class:`Outcome`.

    ``options`` is an :class:`Options` instance; keyword arguments override
    its fields. The answer is True iff the ideal contains a monomial in the
    torus variables (all variables unless ``torus_vars`` is given).
    """
    options = options or Options()
    if kw:
        options = Options(**{**options.__dict__, **kw})
    generators = [f for f in generators]
    ring = _as_ring(generators, r)
    COUNTERS.reset()
    budget = Budget(options.timeout, options.max_systems)
    seed = SemiTriSystem.seed(ring, generators, options.torus_vars)

    def judge(S):
        res = check_triangular(S, budget, options.shortcut("specialize"))
        if tracer is not None:
            data = {"solvable": str(res.solvable).lower()}
            if res.minpoly is not None:
                data["minpoly"] = res.minpoly.format()
            tracer(TraceRecord("is_solvable", S.sid, (), data))
        return res.solvable

    if options.eager:
        def eager(S):
            return Verdict.ANSWER if judge(S) else Verdict.PRUNE

        tri = make_triangular(
            seed, eager, lazy=options.lazy, strip=options.shortcut("strip"), jobs=options.jobs, budget=budget,
            tracer=tracer, validate=options.validate, expand_g=options.expand_g,
        )
        witness = tri.answer
    else:
        tri = make_triangular(
            seed, None, lazy=options.lazy, strip=options.shortcut("strip"), jobs=options.jobs, budget=budget,
            tracer=tracer, validate=options.validate, expand_g=options.expand_g,
        )
        witness = None
        for S in tri.systems:
            budget.check()
            if judge(S):
                witness = S
                break
    return Outcome(witness is None, tri.examined, COUNTERS.snapshot(), witness)


def contains_monomial(generators, r=None, options=None, **kw):
    """True iff the ideal generated by ``generators`` contains a monomial."""
    return decide(generators, r, options, **kw).answer
