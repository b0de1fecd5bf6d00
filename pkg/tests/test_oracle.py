from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from monocheck.errors import ResourceLimitError
from monocheck.oracle import (
    buchberger,
    groebner,
    ideal_contains_one,
    ideal_member,
    oracle_contains_monomial,
    rabinowitsch,
    same_ideal,
)
from monocheck.polyring import PolyRing

from helpers import example_generators, nonzero, polys

R3 = PolyRing.standard(3)
X, Y, Z = R3.gens()
SYMS = sympy.symbols("T1 T2 T3")
SYMPY_ORDER = {"lex": "lex", "deglex": "grlex", "degrevlex": "grevlex"}


def to_sympy(f):
    return sum(
        (sympy.Rational(int(c.numerator), int(c.denominator)) * sympy.prod([s**n for s, n in zip(SYMS, e)])
         for e, c in f.terms),
        sympy.Integer(0),
    )


def as_set(basis):
    return {frozenset((e, Fraction(int(c.numerator), int(c.denominator))) for e, c in g.terms) for g in basis}


def sympy_basis(F, order):
    G = sympy.groebner([to_sympy(f) for f in F], *SYMS, order=SYMPY_ORDER[order], domain="QQ")
    out = set()
    for g in G.exprs:
        p = sympy.Poly(g, *SYMS)
        lc = p.LC(order=SYMPY_ORDER[order])
        out.add(frozenset((m, Fraction(int(sympy.fraction(c / lc)[0]), int(sympy.fraction(c / lc)[1])))
                          for m, c in p.terms()))
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(nonzero(polys(R3, max_degree=2, max_terms=3)), min_size=1, max_size=3),
       st.sampled_from(["lex", "deglex", "degrevlex"]))
def test_reduced_basis_matches_sympy(F, order):
    assert as_set(groebner(F, order)) == sympy_basis(F, order)


def test_basis_examples():
    assert groebner([X**2 - Y, X * Y - 1]) == groebner([X - Y**2, Y**3 - 1])
    assert groebner([X + 1, X - 1]) == [R3.one()]
    assert groebner([]) == []


def test_membership():
    F = [X**2 - Y, Y - 1]
    assert ideal_member(X**2 - 1, F)
    assert not ideal_member(X - 1, F)
    assert ideal_member(R3.zero(), F)
    assert same_ideal(F, [X**2 - 1, Y - 1])


def test_unit_detection():
    assert ideal_contains_one([X * Y - 1, X])
    assert not ideal_contains_one([X * Y - 1])


def test_rabinowitsch_ring():
    polys, big = rabinowitsch([X], R3)
    assert big.names == ("T1", "T2", "T3", "Y")
    assert polys[-1] == big.one() - big.var(1) * big.var(2) * big.var(3) * big.var(4)
    named = PolyRing(("Y", "Z"))
    _, big = rabinowitsch([named.var(1)], named, (1,))
    assert big.names == ("Y", "Z", "Y_")


def test_example_ideal():
    R4 = PolyRing.standard(4)
    f1, f2 = example_generators(R4)
    T1, T2, T3, T4 = R4.gens()
    assert oracle_contains_monomial([f1, f2])
    assert ideal_member(T1 * T2**2 * T4, [f1, f2])
    assert not oracle_contains_monomial([f1, f2], torus_vars=(1, 2, 3))
    sym = sympy.symbols("T1:5")
    G = sympy.groebner([(sym[2] - sym[0]) * (sym[2] - sym[1]) * sym[1], (sym[0] + sym[1] - sym[2]) * sym[3]],
                       *sym, order="grevlex")
    assert G.contains(sym[0] * sym[1] ** 2 * sym[3])


def test_prime_field():
    F7 = PolyRing.standard(2, 7)
    x, y = F7.gens()
    assert ideal_contains_one([x - 1, x - 2])
    assert not oracle_contains_monomial([x - 2, y - 3])
    assert oracle_contains_monomial([x**7 - x, x**6 - 2])


def test_timeout():
    R4 = PolyRing.standard(4)
    T1, T2, T3, T4 = R4.gens()
    F = [T1**3 * T2 - T3**4 + 1, T2**3 * T3 - T4**2 * T1, T3**3 * T4 - T1**2 + T2]
    with pytest.raises(ResourceLimitError):
        buchberger(F, "lex", timeout=0)
