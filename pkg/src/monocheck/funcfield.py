"""Rational function fields, finite quotient rings and minimal polynomials.

A triangular system with pivots k_1 < ... < k_s is viewed over the field
L = K(T_i ; i not a pivot). Elements of L are :class:`RatFunc` values whose
denominator is a product of powers of *atoms*: primitive polynomials held
in the :class:`FunctionField`'s factor base. Denominators are combined by
multiset maximum and cancelled by trial division against the atoms, so no
multivariate gcd is ever computed.

The monic quotient ring R = L[T_k1..T_ks]/<f_1..f_s> is handled as a tower
R_1 = R_2[T_k1]/<f_1>, ..., R_s = L[T_ks]/<f_s>. An element is a flat tuple of
``dim(R)`` coordinates in the monomial basis ``product(range(d_1), ...,
range(d_s))`` (first variable most significant).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ContractError
from .polyring import MPoly, exact_quotient
from .stats import COUNTERS


@dataclass(frozen=True)
class RatFunc:
    num: MPoly
    den: tuple = ()  # ((atom index, multiplicity), ...) sorted by index

    def __bool__(self):
        return bool(self.num)


class FunctionField:
    """L = K(T_i ; i not in ``dense``) together with its factor base."""

    def __init__(self, ring, dense):
        self.ring = ring
        self.dense = tuple(sorted(dense))
        self.params = tuple(i for i in range(1, ring.nvars + 1) if i not in self.dense)
        self.atoms = []
        self._index = {}
        self._powers = {}
        self.zero = RatFunc(ring.zero())
        self.one = RatFunc(ring.one())

    # -- factor base -------------------------------------------------------

    def _register(self, atom):
        idx = self._index.get(atom)
        if idx is None:
            idx = len(self.atoms)
            self.atoms.append(atom)
            self._index[atom] = idx
        return idx

    def atomize(self, p):
        """Write ``p = c * prod(atom_i ** e_i)``; returns ``(c, {i: e_i})``.

        Known atoms are divided out first; any nonconstant cofactor left over
        becomes a new atom.
        """
        if not p:
            raise ZeroDivisionError("cannot atomize zero")
        exps = {}
        cur = p
        for idx, atom in enumerate(self.atoms):
            if cur.is_constant():
                break
            while True:
                q = exact_quotient(cur, atom)
                if q is None:
                    break
                cur = q
                exps[idx] = exps.get(idx, 0) + 1
        if cur.is_constant():
            return cur.constant_value(), exps
        prim = cur.primitive()
        c = cur.terms[0][1] / prim.terms[0][1] if self.ring.characteristic == 0 else (
            cur.terms[0][1] * pow(prim.terms[0][1], -1, self.ring.characteristic)
        ) % self.ring.characteristic
        idx = self._register(prim)
        exps[idx] = exps.get(idx, 0) + 1
        return c, exps

    def seed_atoms(self, polys):
        for p in polys:
            if p and not p.is_constant() and not (p.variables() & set(self.dense)):
                self.atomize(p)

    def _atom_power(self, idx, m):
        key = (idx, m)
        val = self._powers.get(key)
        if val is None:
            val = self.atoms[idx] ** m
            self._powers[key] = val
        return val

    def den_poly(self, den):
        out = self.ring.one()
        for idx, m in (den.items() if isinstance(den, dict) else den):
            if m:
                out = out * self._atom_power(idx, m)
        return out

    def _cancel(self, num, den):
        """Divide num by denominator atoms where exact; returns RatFunc."""
        if not num:
            return self.zero
        left = {}
        for idx in sorted(den):
            m = den[idx]
            atom = self.atoms[idx]
            while m and not num.is_constant():
                q = exact_quotient(num, atom)
                if q is None:
                    break
                num = q
                m -= 1
            if m:
                left[idx] = m
        return RatFunc(num, tuple(sorted(left.items())))

    # -- arithmetic --------------------------------------------------------

    def from_poly(self, p):
        return RatFunc(p)

    def scalar(self, c):
        return RatFunc(self.ring.const(c))

    def is_zero(self, a):
        return not a.num

    def is_one(self, a):
        return not a.den and a.num == self.one.num

    def neg(self, a):
        return RatFunc(-a.num, a.den)

    def add(self, a, b):
        if not a.num:
            return b
        if not b.num:
            return a
        if a.den == b.den:
            num = a.num + b.num
            if not a.den:
                return RatFunc(num)
            return self._cancel(num, dict(a.den))
        da, db = dict(a.den), dict(b.den)
        lcm = dict(da)
        for idx, m in db.items():
            if m > lcm.get(idx, 0):
                lcm[idx] = m
        fa = {i: m - da.get(i, 0) for i, m in lcm.items() if m > da.get(i, 0)}
        fb = {i: m - db.get(i, 0) for i, m in lcm.items() if m > db.get(i, 0)}
        num = a.num * self.den_poly(fa) + b.num * self.den_poly(fb)
        return self._cancel(num, lcm)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a.num or not b.num:
            return self.zero
        if not a.den and not b.den:
            return RatFunc(a.num * b.num)
        na = self._cancel(a.num, dict(b.den))
        nb = self._cancel(b.num, dict(a.den))
        den = dict(na.den)
        for idx, m in nb.den:
            den[idx] = den.get(idx, 0) + m
        return RatFunc(na.num * nb.num, tuple(sorted(den.items())))

    def mul_poly(self, a, p):
        return self.mul(a, RatFunc(p))

    def inv(self, a):
        if not a.num:
            raise ZeroDivisionError("inverse of zero in the function field")
        c, exps = self.atomize(a.num)
        num = self.den_poly(a.den).scale(self.ring.inv(c))
        return RatFunc(num, tuple(sorted(exps.items())))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return not self.sub(a, b).num

    def as_fraction(self, a):
        """``(numerator, denominator)`` as plain polynomials."""
        return a.num, self.den_poly(a.den)

    def evaluate(self, a, point):
        num, den = self.as_fraction(a)
        return num.evaluate(point) / den.evaluate(point) if self.ring.characteristic == 0 else (
            num.evaluate(point) * pow(den.evaluate(point), -1, self.ring.characteristic)
        ) % self.ring.characteristic

    def format(self, a):
        num, den = self.as_fraction(a)
        if den == self.ring.one():
            return str(num)
        return f"({num})/({den})"


# ---------------------------------------------------------------------------
# quotient rings


class QuotientRing:
    """R = L[T_k1, ..., T_ks] / <f_1, ..., f_s> with every f_i monic.

    ``reducers[i]`` lists the coefficients ``c_0 .. c_{d_i - 1}`` (elements of
    the tail ring at level i + 1) of ``f_i = T_ki^d_i + sum c_e T_ki^e``.
    """

    def __init__(self, field, dense, degrees, reducers):
        self.field = field
        self.dense = tuple(dense)
        self.degrees = tuple(degrees)
        self.reducers = tuple(reducers)
        dims = [1]
        for d in reversed(self.degrees):
            dims.append(dims[-1] * d)
        self.dims = tuple(reversed(dims))
        self.dim = self.dims[0]

    @property
    def s(self):
        return len(self.degrees)

    def tail(self, i):
        return QuotientRing(self.field, self.dense[i:], self.degrees[i:], self.reducers[i:])

    def basis(self):
        return list(itertools.product(*(range(d) for d in self.degrees)))

    # -- element constructors ---------------------------------------------

    def zero(self):
        return (self.field.zero,) * self.dim

    def scalar(self, lam):
        return (lam,) + (self.field.zero,) * (self.dim - 1)

    def one(self):
        return self.scalar(self.field.one)

    def is_zero(self, a):
        return not any(x.num for x in a)

    def is_scalar(self, a):
        return not any(x.num for x in a[1:])

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        F = self.field
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        F = self.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.field.neg(x) for x in a)

    def scale(self, a, lam):
        F = self.field
        return tuple(F.mul(x, lam) for x in a)

    def mul(self, a, b):
        return self._mul(a, b, 0)

    def _mul(self, a, b, level):
        F = self.field
        if level == len(self.degrees):
            return (F.mul(a[0], b[0]),)
        d = self.degrees[level]
        B = self.dims[level + 1]
        ab = [a[t * B:(t + 1) * B] for t in range(d)]
        bb = [b[t * B:(t + 1) * B] for t in range(d)]
        na = [any(x.num for x in blk) for blk in ab]
        nb = [any(x.num for x in blk) for blk in bb]
        conv = [None] * (2 * d - 1)
        for u in range(d):
            if not na[u]:
                continue
            for v in range(d):
                if not nb[v]:
                    continue
                prod = self._mul(ab[u], bb[v], level + 1)
                t = u + v
                conv[t] = prod if conv[t] is None else _vadd(F, conv[t], prod)
        return self._reduce(conv, level)

    def _reduce(self, conv, level):
        """Reduce a univariate polynomial over the tail ring modulo f_level."""
        F = self.field
        d = self.degrees[level]
        B = self.dims[level + 1]
        red = self.reducers[level]
        live = [any(x.num for x in c) for c in red]
        for t in range(len(conv) - 1, d - 1, -1):
            c = conv[t]
            if c is None or not any(x.num for x in c):
                continue
            for e in range(d):
                if not live[e]:
                    continue
                prod = self._mul(c, red[e], level + 1)
                idx = t - d + e
                conv[idx] = _vneg(F, prod) if conv[idx] is None else _vsub(F, conv[idx], prod)
        zero = (F.zero,) * B
        out = []
        for t in range(d):
            out.extend(conv[t] if t < len(conv) and conv[t] is not None else zero)
        return tuple(out)

    def pow(self, a, n):
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    # -- normal forms ------------------------------------------------------

    def normal_form(self, f):
        """Residue class of a dense polynomial ``{exponents: RatFunc}``.

        Exponent tuples have one entry per dense variable of this ring.
        """
        return self._nf(f, 0)

    def _nf(self, f, level):
        F = self.field
        s = len(self.degrees)
        if level == s:
            acc = F.zero
            for c in f.values():
                acc = F.add(acc, c)
            return (acc,)
        groups = {}
        for e, c in f.items():
            if c.num:
                groups.setdefault(e[level], {})[e] = c
        if not groups:
            return (F.zero,) * self.dims[level]
        top = max(groups)
        conv = [None] * (max(top + 1, self.degrees[level]))
        for n, sub in groups.items():
            conv[n] = self._nf(sub, level + 1)
        return self._reduce(conv, level)

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return coords

    def generator_polys(self):
        """The monic generators as dense polynomials (for display and tests)."""
        out = []
        s = len(self.degrees)
        for i in range(s):
            tail = self.tail(i + 1)
            basis = tail.basis()
            f = {}
            top = [0] * s
            top[i] = self.degrees[i]
            f[tuple(top)] = self.field.one
            for e, coeff in enumerate(self.reducers[i]):
                for mono, c in zip(basis, coeff):
                    if c.num:
                        key = [0] * s
                        key[i] = e
                        key[i + 1:] = mono
                        f[tuple(key)] = c
            out.append(f)
        return out

    def to_dense(self, a):
        return {mono: c for mono, c in zip(self.basis(), a) if c.num}


def _vadd(F, a, b):
    return tuple(F.add(x, y) for x, y in zip(a, b))


def _vsub(F, a, b):
    return tuple(F.sub(x, y) for x, y in zip(a, b))


def _vneg(F, a):
    return tuple(F.neg(x) for x in a)


# ---------------------------------------------------------------------------
# embedding


def dense_poly(f, field):
    """Rewrite f in K[T1..Tr] as ``{dense exponents: RatFunc}`` over L."""
    ring = field.ring
    pos = [k - 1 for k in field.dense]
    groups = {}
    for e, c in f.terms:
        key = tuple(e[k] for k in pos)
        rest = list(e)
        for k in pos:
            rest[k] = 0
        groups.setdefault(key, []).append((tuple(rest), c))
    # terms of each group keep the parent's relative lex order
    return {key: RatFunc(MPoly(ring, tuple(ts))) for key, ts in groups.items()}


@dataclass
class EmbeddedSystem:
    field: FunctionField
    dense: tuple
    equations: tuple
    ineq: tuple


def embed(S):
    """Move a triangular system to L[T_k1..T_ks], L = K(non-pivot variables)."""
    if any(not f.is_constant() for f in S.unsorted):
        raise ContractError("embedding needs a triangular system")
    if any(f for f in S.unsorted):
        raise ContractError("the system carries a nonzero constant equation")
    pivots = [f.lowest_variable() for f in S.triangular]
    if any(p is None for p in pivots) or any(a >= b for a, b in zip(pivots, pivots[1:])):
        raise ContractError(f"sorted equations are not of triangular shape: pivots {pivots}")
    field = FunctionField(S.ring, pivots)
    field.seed_atoms(S.ineq.factors)
    eqs = tuple(dense_poly(f, field) for f in S.triangular)
    ineq = tuple(dense_poly(g, field) for g in S.ineq.factors)
    return EmbeddedSystem(field, field.dense, eqs, ineq)


# ---------------------------------------------------------------------------
# minimal polynomials


def _clear(field, a):
    """Common-denominator clearing: returns ``(polys, den)`` with
    ``polys[t] = a[t] * prod(den)``."""
    lcm = {}
    for x in a:
        for idx, m in x.den:
            if m > lcm.get(idx, 0):
                lcm[idx] = m
    out = []
    for x in a:
        if not x.num:
            out.append(x.num)
            continue
        d = dict(x.den)
        extra = {i: m - d.get(i, 0) for i, m in lcm.items() if m > d.get(i, 0)}
        out.append(x.num * field.den_poly(extra) if extra else x.num)
    return out, lcm


def _exact(p, q):
    if q == q.ring.one():
        return p
    r = exact_quotient(p, q)
    if r is None:
        raise ArithmeticError("fraction-free elimination lost exactness")
    return r


def annihilator(g, R, budget=None):
    """Coefficients ``q_0..q_m`` (low to high, q_m != 0) of a minimal-degree
    polynomial with ``q(g) = 0`` in R. Not normalised to be monic.

    Powers g^0, g^1, ... are cleared of denominators and eliminated
    incrementally with fraction-free (Bareiss) steps; the first power that
    becomes dependent yields the relation.
    """
    COUNTERS.add("minpoly_calls")
    F = R.field
    if R.is_zero(g):
        return [F.zero, F.one]
    if R.is_scalar(g):
        return [F.neg(g[0]), F.one]
    ring = F.ring
    zero = ring.zero()
    one = ring.one()
    rows = []  # (pivot column, reduced row, reduced augmentation)
    dens = []
    power = R.one()
    for m in range(R.dim + 1):
        if budget is not None:
            budget.check()
        vec, den = _clear(F, power)
        dens.append(den)
        aug = [zero] * m + [one]
        prev = one
        for col, rvec, raug in rows:
            p = rvec[col]
            c = vec[col]
            if c:
                vec = [_exact(p * x - c * y, prev) for x, y in zip(vec, rvec)]
                aug = [_exact(p * x - c * y, prev) for x, y in zip(aug, raug + [zero] * (len(aug) - len(raug)))]
            else:
                vec = [_exact(p * x, prev) for x in vec]
                aug = [_exact(p * x, prev) for x in aug]
            prev = p
        pivot_col = next((t for t, x in enumerate(vec) if x), None)
        if pivot_col is None:
            return [RatFunc(a * F.den_poly(d)) if a else F.zero for a, d in zip(aug, dens)]
        rows.append((pivot_col, vec, aug))
        power = R.mul(power, g)
    raise ArithmeticError("no linear dependence among dim(R) + 1 powers")


@dataclass(frozen=True)
class MinPoly:
    """Monic minimal polynomial; ``coeffs`` run from X^0 up to X^m."""

    field: FunctionField
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_monomial(self):
        return not any(c.num for c in self.coeffs[:-1])

    def evaluate_at(self, g, R):
        acc = R.zero()
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, g), R.scalar(c))
        return acc

    def format(self, sep=";"):
        return sep.join(self.field.format(c) for c in self.coeffs)

    def __str__(self):
        parts = []
        for n in range(self.degree, -1, -1):
            c = self.coeffs[n]
            if not c.num:
                continue
            x = "" if n == 0 else ("X" if n == 1 else f"X^{n}")
            if self.field.is_one(c) and x:
                parts.append(x)
            else:
                txt = self.field.format(c)
                parts.append(f"({txt})*{x}" if x else f"({txt})")
        return " + ".join(parts)


def monic(coeffs, field):
    lead_inv = field.inv(coeffs[-1])
    return tuple(field.mul(c, lead_inv) for c in coeffs[:-1]) + (field.one,)


def minimal_polynomial(g, R, budget=None):
    coeffs = annihilator(g, R, budget)
    return MinPoly(R.field, monic(coeffs, R.field))


def split_min_poly(p, field=None):
    """Decompose ``p = bpoly * X^(j+1) + a * X^j`` with j maximal.

    Accepts a :class:`MinPoly` or a coefficient list (low to high). Returns
    ``(j, a, bpoly)`` where ``bpoly`` is a coefficient list, empty when p is
    a monomial.
    """
    coeffs = p.coeffs if isinstance(p, MinPoly) else tuple(p)
    j = next((t for t, c in enumerate(coeffs) if c.num), None)
    if j is None:
        raise ContractError("cannot split the zero polynomial")
    bpoly = list(coeffs[j + 1:])
    while bpoly and not bpoly[-1].num:
        bpoly.pop()
    return j, coeffs[j], bpoly


def _horner(R, coeffs, h):
    acc = R.zero()
    for c in reversed(coeffs):
        acc = R.add(R.mul(acc, h), R.scalar(c))
    return acc


def make_monic(E, budget=None):
    """Turn a dense triangular system over L into a monic quotient ring.

    Generators are processed from the last pivot to the first. For each
    ``f = h*T^d + c`` the inverse-like element ``h' = -bpoly(h)/a`` is read
    off the minimal polynomial of h in the already monic tail, and f is
    replaced by ``T^d + h'*c`` with coefficients in normal form.
    """
    F = E.field
    s = len(E.dense)
    degrees = [0] * s
    reducers = [()] * s
    for i in range(s - 1, -1, -1):
        tail = QuotientRing(F, E.dense[i + 1:], degrees[i + 1:], reducers[i + 1:])
        groups = {}
        for e, c in E.equations[i].items():
            if any(e[:i]):
                raise ContractError("equation involves an earlier pivot variable")
            groups.setdefault(e[i], {})[e[i + 1:]] = c
        d = max(groups)
        if d < 1:
            raise ContractError("equation has no positive degree in its pivot")
        coeffs = [tail.normal_form(groups.get(n, {})) for n in range(d + 1)]
        h = coeffs[d]
        if tail.is_scalar(h) and h[0].num:
            hprime = tail.scalar(F.inv(h[0]))
        else:
            j, a, bpoly = split_min_poly(annihilator(h, tail, budget))
            scale = F.neg(F.inv(a))
            hprime = tail.scale(_horner(tail, bpoly, h), scale) if bpoly else tail.zero()
        reducers[i] = tuple(tail.mul(hprime, coeffs[e]) for e in range(d))
        degrees[i] = d
    return QuotientRing(F, E.dense, degrees, reducers)


def normal_form(f, R):
    return R.normal_form(f)
