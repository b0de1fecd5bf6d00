"""Independent Groebner basis oracle.

Polynomials here are plain ``{exponents: coefficient}`` dicts over the
coefficient field of a :class:`PolyRing`, compared under a selectable
monomial order. Nothing from the triangulation pipeline is used, so the
oracle can cross-check it.
"""

from __future__ import annotations

import time

from .errors import ResourceLimitError
from .polyring import PolyRing

ORDERS = {
    "lex": lambda e: e,
    "deglex": lambda e: (sum(e), e),
    "degrevlex": lambda e: (sum(e), tuple(-x for x in reversed(e))),
}


class _Field:
    def __init__(self, ring):
        self.ring = ring
        self.p = ring.characteristic

    def div(self, a, b):
        return a / b if not self.p else a * pow(b, -1, self.p) % self.p

    def norm(self, a):
        return a % self.p if self.p else a


def _lead(f, key):
    return max(f, key=key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monic(f, key, F):
    lm = _lead(f, key)
    c = f[lm]
    return {e: F.div(v, c) for e, v in f.items()}


def _reduce(f, G, heads, key, F):
    """Full reduction of f modulo G; returns a (possibly empty) dict."""
    f = dict(f)
    out = {}
    while f:
        e = _lead(f, key)
        c = f[e]
        for g, lm in zip(G, heads):
            if _divides(lm, e):
                m = tuple(x - y for x, y in zip(e, lm))
                t = F.div(c, g[lm])
                for ge, gc in g.items():
                    k = tuple(x + y for x, y in zip(ge, m))
                    v = F.norm(f.get(k, 0) - t * gc)
                    if v:
                        f[k] = v
                    else:
                        f.pop(k, None)
                break
        else:
            out[e] = c
            del f[e]
    return out


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f, g, lf, lg, F):
    L = _lcm(lf, lg)
    mf = tuple(x - y for x, y in zip(L, lf))
    mg = tuple(x - y for x, y in zip(L, lg))
    cf, cg = f[lf], g[lg]
    out = {}
    for e, c in f.items():
        k = tuple(x + y for x, y in zip(e, mf))
        out[k] = F.div(c, cf)
    for e, c in g.items():
        k = tuple(x + y for x, y in zip(e, mg))
        v = F.norm(out.get(k, 0) - F.div(c, cg))
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def buchberger(polys, order="lex", timeout=None, stop_on_unit=False):
    """Reduced Groebner basis (as term dicts, monic) of the given MPolys.

    Uses the normal selection strategy together with the coprime-leading-
    monomial and chain criteria. With ``stop_on_unit`` the computation
    returns ``[{0: 1}]`` as soon as a nonzero constant appears.
    """
    polys = [f for f in polys if f]
    if not polys:
        return []
    ring = polys[0].ring
    F = _Field(ring)
    key = ORDERS[order]
    deadline = None if timeout is None else time.monotonic() + timeout
    zero = (0,) * ring.nvars
    G, heads = [], []
    pairs = set()

    def unit():
        return [{zero: ring.scalar(1)}]

    def add(h):
        h = _monic(h, key, F)
        lm = _lead(h, key)
        idx = len(G)
        G.append(h)
        heads.append(lm)
        for j in range(idx):
            pairs.add((j, idx))

    for f in polys:
        h = _reduce(dict(f.terms), G, heads, key, F)
        if h:
            if stop_on_unit and _lead(h, key) == zero:
                return unit()
            add(h)
    done = set()
    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError("groebner basis computation timed out", "timeout")
        i, j = min(pairs, key=lambda ij: (key(_lcm(heads[ij[0]], heads[ij[1]])), ij))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = heads[i], heads[j]
        L = _lcm(li, lj)
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        if any(
            k not in (i, j)
            and _divides(heads[k], L)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        h = _reduce(_spoly(G[i], G[j], li, lj, F), G, heads, key, F)
        if h:
            if stop_on_unit and _lead(h, key) == zero:
                return unit()
            add(h)
    return _interreduce(G, heads, key, F)


def _interreduce(G, heads, key, F):
    keep = [
        n for n, lm in enumerate(heads)
        if not any(m != n and _divides(heads[m], lm) and (heads[m] != lm or m < n)
                   for m in range(len(G)))
    ]
    basis = [G[n] for n in keep]
    hs = [heads[n] for n in keep]
    out = []
    for n, g in enumerate(basis):
        others = basis[:n] + basis[n + 1:]
        ohs = hs[:n] + hs[n + 1:]
        lm = hs[n]
        tail = {e: c for e, c in g.items() if e != lm}
        red = _reduce(tail, others, ohs, key, F)
        red[lm] = g[lm]
        out.append(red)
    out.sort(key=lambda g: key(_lead(g, key)), reverse=True)
    return out


def to_polys(basis, ring):
    return [ring.from_dict(g) for g in basis]


def groebner(polys, order="lex", timeout=None):
    """Reduced Groebner basis as MPolys in the ring of the inputs."""
    polys = [f for f in polys if f]
    if not polys:
        return []
    return to_polys(buchberger(polys, order, timeout), polys[0].ring)


def ideal_contains_one(polys, order="degrevlex", timeout=None):
    basis = buchberger(polys, order, timeout, stop_on_unit=True)
    return any(all(x == 0 for x in _lead(g, ORDERS[order])) for g in basis)


def ideal_member(f, polys, order="degrevlex", timeout=None):
    """True iff f lies in the ideal generated by ``polys``."""
    if not f:
        return True
    basis = buchberger(polys, order, timeout)
    key = ORDERS[order]
    heads = [_lead(g, key) for g in basis]
    return not _reduce(dict(f.terms), basis, heads, key, _Field(f.ring))


def rabinowitsch(polys, ring, torus_vars=None):
    """``F + <1 - Y * prod(T_i)>`` in a ring with one extra variable Y.

    The extra variable is placed last, i.e. lowest in lex order.
    """
    names = ring.names + (_fresh(ring.names),)
    big = PolyRing(names, ring.characteristic)
    lifted = [big.from_dict({e + (0,): c for e, c in f.terms}) for f in polys]
    idx = range(1, ring.nvars + 1) if torus_vars is None else torus_vars
    prod = big.var(big.nvars)
    for i in idx:
        prod = prod * big.var(i)
    return lifted + [big.one() - prod], big


def _fresh(names):
    name = "Y"
    while name in names:
        name += "_"
    return name


def oracle_contains_monomial(polys, r=None, torus_vars=None, order="degrevlex", timeout=None):
    """Monomial containment via the Rabinowitsch trick and Buchberger.

    ``r`` may be a variable count or the ring itself; it is only checked.
    """
    polys = [f for f in polys if f]
    if not polys:
        return False
    ring = polys[0].ring
    if r is not None and r != ring and r != ring.nvars:
        raise ValueError(f"r={r} but the generators live in {ring.nvars} variables")
    big_polys, _ = rabinowitsch(polys, ring, torus_vars)
    return ideal_contains_one(big_polys, order, timeout)


def same_ideal(F, G, order="degrevlex"):
    return groebner(F, order) == groebner(G, order)
