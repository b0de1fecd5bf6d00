"""Semi-triangular systems, triangle mushes and their rewriting operations.

A semi-triangular system ``(F_box, F_tri, k, g)`` is stored as a frozen
:class:`SemiTriSystem`. Its solution set is ``V(F_box + F_tri) minus V(g)``;
a triangle mush is a plain list of systems whose solution set is the union.
The inequation ``g`` is kept as a :class:`FactorList` and never expanded on
the hot path: every divisibility side condition is certified by exhibiting
the divisor as a sub-product of the stored factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ContractError, ResourceLimitError
from .polyring import exact_quotient, pseudo_div

ENUMERATION_BOUND = 200_000


def pivot(f):
    """``k(f)``: index of the lex-largest variable occurring in f."""
    return f.lowest_variable()


@dataclass(frozen=True)
class FactorList:
    """The inequation g as an unexpanded product of nonconstant factors."""

    factors: tuple = ()

    @classmethod
    def of(cls, polys):
        out = []
        for f in polys:
            if not f:
                raise ContractError("an inequation factor cannot be zero")
            if not f.is_constant():
                out.append(f.primitive())
        return cls(tuple(out))

    def times(self, *polys):
        return FactorList(self.factors + FactorList.of(polys).factors)

    def expand(self, ring):
        g = ring.one()
        for f in self.factors:
            g = g * f
        return g

    def certify(self, b):
        """True if b equals a scalar times a sub-product of the factors.

        Depth-first search over sub-multisets by exact trial division; a
        ``False`` answer only means b is not such a sub-product, not that b
        fails to divide g.
        """
        if not b:
            return False
        return _subproduct(b, self.factors)

    def divides(self, b, ring):
        """Full divisibility test ``b | g``, falling back to expanding g."""
        if self.certify(b):
            return True
        return exact_quotient(self.expand(ring), b) is not None

    def nonzero_at(self, point):
        return all(f.evaluate(point) for f in self.factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def _subproduct(cur, factors):
    if cur.is_constant():
        return True
    tried = set()
    for idx, f in enumerate(factors):
        if f in tried:
            continue
        tried.add(f)
        q = exact_quotient(cur, f)
        if q is not None and _subproduct(q, factors[idx + 1:]):
            return True
    return False


def _normalize_members(polys):
    """Primitive form, zeros dropped, duplicates removed, order kept.
    A nonzero constant collapses the whole set to ``(1,)``."""
    out = []
    seen = set()
    for f in polys:
        if not f:
            continue
        f = f.primitive()
        if f.is_constant():
            return (f,)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return tuple(out)


@dataclass(frozen=True)
class SemiTriSystem:
    ring: object
    unsorted: tuple
    triangular: tuple
    k: int
    ineq: FactorList
    sid: int = field(default=-1, compare=False)

    @classmethod
    def build(cls, ring, unsorted, triangular=(), k=0, ineq=()):
        if not isinstance(ineq, FactorList):
            ineq = FactorList.of(ineq)
        tri = tuple(f.primitive() for f in triangular)
        return cls(ring, _normalize_members(unsorted), tri, k, ineq)

    @classmethod
    def seed(cls, ring, generators, torus_vars=None):
        """``(F, {}, 0, T_1 ... T_r)`` or, with ``torus_vars``, the product of
        just those variables as the inequation."""
        idx = range(1, ring.nvars + 1) if torus_vars is None else torus_vars
        return cls.build(ring, generators, (), 0, [ring.var(i) for i in idx])

    def with_id(self, sid):
        return SemiTriSystem(self.ring, self.unsorted, self.triangular, self.k, self.ineq, sid)

    def replace(self, unsorted=None, triangular=None, k=None, ineq=None):
        return SemiTriSystem(
            self.ring,
            _normalize_members(self.unsorted if unsorted is None else unsorted),
            self.triangular if triangular is None else tuple(f.primitive() for f in triangular),
            self.k if k is None else k,
            self.ineq if ineq is None else ineq,
        )

    @property
    def r(self):
        return self.ring.nvars

    def is_dead(self):
        """A nonzero constant among the unsorted equations: V is empty."""
        return any(f.is_constant() for f in self.unsorted)

    def active(self):
        """Unsorted members of positive degree in T_{k+1}."""
        return [f for f in self.unsorted if f.deg_in(self.k + 1) > 0]

    def equations(self):
        return self.unsorted + self.triangular

    def contains_point(self, point):
        return all(not f.evaluate(point) for f in self.equations()) and self.ineq.nonzero_at(point)

    def __str__(self):
        box = ", ".join(map(str, self.unsorted)) or "-"
        tri = ", ".join(map(str, self.triangular)) or "-"
        g = "*".join(f"({f})" for f in self.ineq) or "1"
        return f"({{{box}}}, {{{tri}}}, {self.k}, {g})"


def is_triangular(S):
    return all(f.is_constant() for f in S.unsorted)


def check_invariants(S, expand_g=False):
    """List the violated semi-triangular conditions (empty when valid)."""
    problems = []
    pivots = []
    for f in S.triangular:
        if not f or f.is_constant():
            problems.append(f"triangular member {f} has no pivot")
            continue
        pivots.append(pivot(f))
    if any(a >= b for a, b in zip(pivots, pivots[1:])):
        problems.append(f"pivots {pivots} are not strictly increasing")
    for f in S.triangular:
        if not f or f.is_constant():
            continue
        lc = f.lc_in(pivot(f))
        ok = S.ineq.divides(lc, S.ring) if expand_g else S.ineq.certify(lc)
        if not ok:
            problems.append(f"leading coefficient {lc} of {f} does not divide g")
    if not 0 <= S.k <= S.r:
        problems.append(f"progress index {S.k} outside [0, {S.r}]")
    if any(p > S.k for p in pivots):
        problems.append(f"pivots {pivots} exceed k={S.k}")
    for f in S.unsorted:
        low = f.lowest_variable()
        if low is not None and low <= S.k:
            problems.append(f"unsorted member {f} involves T{low} with k={S.k}")
    return problems


def validate(S, expand_g=False):
    problems = check_invariants(S, expand_g)
    if problems:
        raise ContractError("; ".join(problems))
    return S


# ---------------------------------------------------------------------------
# the five solution-preserving operations


def _member(S, f):
    f = f.primitive()
    if f not in S.unsorted:
        raise ContractError(f"{f} is not an unsorted member of the system")
    return f


def op_case_split(S, f, new_factors):
    """Split on f = 0 versus g' = g * new_factors != 0 (needs g' | f g)."""
    low = f.lowest_variable()
    if low is not None and low <= S.k:
        raise ContractError(f"{f} involves a variable at or before T{S.k}")
    new = FactorList.of(new_factors)
    h = new.expand(S.ring)
    if f and exact_quotient(f, h) is None:
        if exact_quotient(f * S.ineq.expand(S.ring), h) is None:
            raise ContractError("the new inequation factors do not divide f*g")
    return [
        S.replace(unsorted=S.unsorted + (f,)),
        S.replace(ineq=FactorList(S.ineq.factors + new.factors)),
    ]


def op_division(S, f, h, lazy=False, with_remainder=False):
    """Replace f by its pseudo-remainder modulo h in T_{k+1}; needs LC(h) | g.

    With ``with_remainder`` the raw remainder is returned alongside.
    """
    f = _member(S, f)
    h = _member(S, h)
    if f == h:
        raise ContractError("dividend and divisor must be distinct members")
    i = S.k + 1
    if i > S.r or h.deg_in(i) < 1:
        raise ContractError(f"divisor must involve T{i}")
    b = h.lc_in(i)
    if not S.ineq.certify(b):
        raise ContractError(f"leading coefficient {b} is not certified to divide g")
    _, _, u = pseudo_div(f, h, i, lazy=lazy)
    rest = tuple(x for x in S.unsorted if x != f)
    out = [S.replace(unsorted=rest + (u,))]
    return (out, u) if with_remainder else out


def op_advance(S):
    if S.k >= S.r:
        raise ContractError("k is already r")
    if S.active():
        raise ContractError(f"T{S.k + 1} still occurs among the unsorted equations")
    return [S.replace(k=S.k + 1)]


def _unique_active(S, f):
    if S.k >= S.r:
        raise ContractError("k is already r")
    f = _member(S, f)
    act = S.active()
    if f not in act:
        raise ContractError(f"{f} has no positive degree in T{S.k + 1}")
    if len(act) != 1:
        raise ContractError(f"{len(act)} unsorted members involve T{S.k + 1}; need exactly one")
    return f


def op_sort(S, f):
    f = _unique_active(S, f)
    lc = f.lc_in(S.k + 1)
    if not S.ineq.certify(lc):
        raise ContractError(f"leading coefficient {lc} is not certified to divide g")
    rest = tuple(x for x in S.unsorted if x != f)
    return [S.replace(unsorted=rest, triangular=S.triangular + (f,), k=S.k + 1)]


def op_strip(S):
    """Divide every unsorted member by the inequation factors it contains.

    Where g does not vanish, ``f = h * f'`` with ``h | g`` vanishes exactly
    when f' does, so the solution set is unchanged. A member reduced to a
    nonzero constant makes the system dead.
    """
    if not S.ineq.factors:
        return S
    out = []
    changed = False
    for f in S.unsorted:
        cur = f
        for h in S.ineq.factors:
            while not cur.is_constant():
                q = exact_quotient(cur, h)
                if q is None:
                    break
                cur = q
                changed = True
        out.append(cur)
    return S.replace(unsorted=out) if changed else S


def op_last_poly(S, f):
    """Split on the vanishing pattern of the coefficients of f in T_{k+1}.

    Branches are returned in descending j, then the branch where all
    coefficients vanish. Branches with a zero leading coefficient a_j are
    omitted since their inequation is identically zero.
    """
    f = _unique_active(S, f)
    i = S.k + 1
    coeffs = f.coeffs_in(i)
    d = max(coeffs)
    a = [coeffs.get(n, S.ring.zero()) for n in range(d + 1)]
    rest = tuple(x for x in S.unsorted if x != f)
    var = S.ring.var(i)
    out = []
    for j in range(d, 0, -1):
        if not a[j]:
            continue
        fj = S.ring.zero()
        power = S.ring.one()
        for n in range(j + 1):
            if a[n]:
                fj = fj + a[n] * power
            power = power * var
        out.append(
            S.replace(
                unsorted=rest + tuple(a[j + 1:]),
                triangular=S.triangular + (fj,),
                k=i,
                ineq=S.ineq.times(a[j]),
            )
        )
    out.append(S.replace(unsorted=rest + tuple(a), k=i))
    return out


# ---------------------------------------------------------------------------
# brute-force oracle


def enumerate_solutions(systems, bound=ENUMERATION_BOUND):
    """All F_p-rational points of a system or mush, by exhaustive search."""
    if isinstance(systems, SemiTriSystem):
        systems = [systems]
    systems = list(systems)
    if not systems:
        return set()
    ring = systems[0].ring
    p = ring.characteristic
    if p == 0:
        raise ContractError("point enumeration needs a prime characteristic")
    if p ** ring.nvars > bound:
        raise ResourceLimitError(
            f"{p}^{ring.nvars} points exceed the enumeration bound {bound}", kind="enumeration"
        )
    points = set()
    for x in itertools.product(range(p), repeat=ring.nvars):
        if any(S.contains_point(x) for S in systems):
            points.add(x)
    return points


__all__ = [
    "FactorList",
    "SemiTriSystem",
    "check_invariants",
    "enumerate_solutions",
    "is_triangular",
    "op_advance",
    "op_case_split",
    "op_division",
    "op_last_poly",
    "op_sort",
    "op_strip",
    "pivot",
    "validate",
]
