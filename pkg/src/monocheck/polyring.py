"""Sparse multivariate polynomials over Q or F_p.

Polynomials are immutable. Terms are stored as a tuple of ``(exponents,
coefficient)`` pairs sorted strictly descending in the lexicographic order
T1 > T2 > ... > Tr, where ``exponents`` is a tuple of length r. Because
Python compares tuples lexicographically, ``max`` over exponent tuples is the
lex-leading monomial. Variable indices in the public API are 1-based.

Rational coefficients are ``gmpy2.mpq``; prime-field coefficients are plain
ints in ``[0, p)``.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from operator import itemgetter

import gmpy2
from gmpy2 import mpq, mpz

from .errors import ContextError, ContractError, DegenerateInputError
from .stats import COUNTERS

MINUS_INFINITY = float("-inf")

_first = itemgetter(0)
_add = operator.add
_sub = operator.sub


@dataclass(frozen=True)
class PolyRing:
    """K[T1, ..., Tr] with K = Q (characteristic 0) or F_p."""

    names: tuple
    characteristic: int = 0

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        p = self.characteristic
        if p != 0 and (p < 2 or not gmpy2.is_prime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @classmethod
    def standard(cls, r, characteristic=0):
        return cls(tuple(f"T{i}" for i in range(1, r + 1)), characteristic)

    @property
    def nvars(self):
        return len(self.names)

    # -- scalars -----------------------------------------------------------

    def scalar(self, c):
        p = self.characteristic
        if p == 0:
            if isinstance(c, Fraction):
                return mpq(c.numerator, c.denominator)
            return mpq(c)
        if isinstance(c, (Fraction,)) or type(c).__name__ == "mpq":
            num, den = int(c.numerator) % p, int(c.denominator) % p
            if den == 0:
                raise ZeroDivisionError(f"{c} has no image in F_{p}")
            return num * pow(den, -1, p) % p
        return int(c) % p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return 1 / c if p == 0 else pow(c, -1, p)

    # -- constructors ------------------------------------------------------

    def zero(self):
        return MPoly(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.scalar(c)
        if not c:
            return self.zero()
        return MPoly(self, (((0,) * self.nvars, c),))

    def var(self, i, power=1):
        if not 1 <= i <= self.nvars:
            raise IndexError(f"variable index {i} outside [1, {self.nvars}]")
        e = [0] * self.nvars
        e[i - 1] = power
        return MPoly(self, ((tuple(e), self.scalar(1)),))

    def gens(self):
        return tuple(self.var(i) for i in range(1, self.nvars + 1))

    def monomial(self, exps, c=1):
        exps = tuple(int(x) for x in exps)
        if len(exps) != self.nvars or min(exps, default=0) < 0:
            raise ValueError(f"bad exponent vector {exps}")
        c = self.scalar(c)
        return MPoly(self, ((exps, c),)) if c else self.zero()

    def from_dict(self, d):
        """Build a polynomial from ``{exponent tuple: coefficient}``."""
        clean = {}
        for e, c in d.items():
            c = self.scalar(c)
            if c:
                clean[tuple(e)] = c
        return _from_dict(self, clean)

    def __str__(self):
        field = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"{field}[{','.join(self.names)}]"


_KRONECKER_MIN = 256  # term pairs below which the plain double loop wins


def _pack(pairs, length, width):
    """The integer ``sum(c * 256**(width*i))`` over the pairs ``(i, c)``.

    Positive and negative coefficients are laid out in separate byte
    buffers and subtracted at the end."""
    pos = bytearray(length * width)
    neg = bytearray(length * width)
    for i, c in pairs:
        if c > 0:
            pos[i * width:(i + 1) * width] = int(c).to_bytes(width, "little")
        else:
            neg[i * width:(i + 1) * width] = int(-c).to_bytes(width, "little")
    return mpz(int.from_bytes(pos, "little")) - mpz(int.from_bytes(neg, "little"))


def _strides(radix):
    strides = [1] * len(radix)
    for v in range(len(radix) - 2, -1, -1):
        strides[v] = strides[v + 1] * radix[v + 1]
    return strides, strides[0] * radix[0]


def _integral(terms, strides):
    """Common denominator and ``(slot, integer coefficient)`` pairs."""
    den = mpz(1)
    for _, c in terms:
        den = gmpy2.lcm(den, c.denominator)
    return den, [
        (sum(x * s for x, s in zip(e, strides)), c.numerator * (den // c.denominator))
        for e, c in terms
    ]


def _unpack(value, length, width, strides, scale):
    """Inverse of :func:`_pack` for coefficients below ``256**width / 2`` in
    absolute value; terms come out in descending lex order, each multiplied
    by ``scale``. Raises OverflowError when ``value`` does not fit."""
    half = 1 << (8 * width - 1)
    empty = b"\x00" * (width - 1) + b"\x80"
    offset = int.from_bytes(empty * length, "little")
    raw = (int(value) + offset).to_bytes(length * width, "little")
    terms = []
    for i in range(length - 1, -1, -1):
        chunk = raw[i * width:(i + 1) * width]
        if chunk != empty:
            c = int.from_bytes(chunk, "little") - half
            e = []
            rest = i
            for s in strides:
                q, rest = divmod(rest, s)
                e.append(q)
            terms.append((tuple(e), mpq(c) * scale))
    return terms


def _kronecker_mul(f, g):
    """Product over Q by Kronecker substitution: both factors are packed
    into one big integer each and multiplied once. Returns None when the
    packed form would be much larger than the operands (very sparse input).

    The counters are charged exactly as by the term-by-term product, using a
    second packed product of the 0/1 support patterns to count collisions.
    """
    ring = f.ring
    nf, ng = len(f.terms), len(g.terms)
    radix = [a + b + 1 for a, b in zip(f.degrees(), g.degrees())]
    strides, length = _strides(radix)
    if length > 16 * (nf + ng) + 64:
        return None
    dfn, fi = _integral(f.terms, strides)
    dgn, gi = _integral(g.terms, strides)
    bound = max(abs(c) for _, c in fi) * max(abs(c) for _, c in gi) * min(nf, ng)
    width = (int(bound).bit_length() + 2 + 7) // 8
    prod = _pack(fi, length, width) * _pack(gi, length, width)
    terms = _unpack(prod, length, width, strides, mpq(1, dfn * dgn))
    # number of distinct exponent sums, cancelled or not
    w1 = (min(nf, ng).bit_length() + 7) // 8
    hits = _pack([(i, 1) for i, _ in fi], length, w1) * _pack([(i, 1) for i, _ in gi], length, w1)
    raw = int(hits).to_bytes(length * w1, "little")
    empty = bytes(w1)
    support = sum(1 for b in range(0, length * w1, w1) if raw[b:b + w1] != empty)
    COUNTERS.add("multiplications", nf * ng)
    COUNTERS.add("additions", nf * ng - support)
    return MPoly(ring, tuple(terms))


def _from_dict(ring, d):
    """Trusted constructor: ``d`` holds nonzero, already-reduced coefficients."""
    return MPoly(ring, tuple(sorted(d.items(), key=_first, reverse=True)))


class MPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ in ("mpq", "mpz"):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        p = self.ring.characteristic
        d = dict(self.terms)
        adds = 0
        for e, c in other.terms:
            if e in d:
                s = d[e] + c
                adds += 1
                if p:
                    s %= p
                if s:
                    d[e] = s
                else:
                    del d[e]
            else:
                d[e] = c
        COUNTERS.add("additions", adds)
        return _from_dict(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.characteristic
        if p:
            return MPoly(self.ring, tuple((e, (p - c) % p) for e, c in self.terms))
        return MPoly(self.ring, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        if len(other.terms) == 1:
            e, c = other.terms[0]
            return self.mul_term(e, c)
        if len(self.terms) == 1:
            e, c = self.terms[0]
            return other.mul_term(e, c)
        p = self.ring.characteristic
        if not p and len(self.terms) * len(other.terms) >= _KRONECKER_MIN:
            fast = _kronecker_mul(self, other)
            if fast is not None:
                return fast
        d = {}
        adds = 0
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(map(_add, e1, e2))
                c = c1 * c2
                if e in d:
                    d[e] += c
                    adds += 1
                else:
                    d[e] = c
        if p:
            d = {e: c % p for e, c in d.items()}
        d = {e: c for e, c in d.items() if c}
        COUNTERS.add("multiplications", len(self.terms) * len(other.terms))
        COUNTERS.add("additions", adds)
        return _from_dict(self.ring, d)

    __rmul__ = __mul__

    def mul_term(self, exps, c):
        """Multiply by the single term ``c * T^exps``; order is preserved."""
        if not c or not self.terms:
            return self.ring.zero()
        p = self.ring.characteristic
        COUNTERS.add("multiplications", len(self.terms))
        if not any(exps):
            if p:
                return MPoly(self.ring, tuple((e, a * c % p) for e, a in self.terms))
            return MPoly(self.ring, tuple((e, a * c) for e, a in self.terms))
        if p:
            return MPoly(
                self.ring, tuple((tuple(map(_add, e, exps)), a * c % p) for e, a in self.terms)
            )
        return MPoly(self.ring, tuple((tuple(map(_add, e, exps)), a * c) for e, a in self.terms))

    def scale(self, c):
        c = self.ring.scalar(c)
        return self.mul_term((0,) * self.ring.nvars, c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other).__name__ in ("mpq", "mpz"):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[0][1] if self.terms else self.ring.scalar(0)

    def is_monomial(self):
        """True for a single term ``c * T^nu`` with c nonzero."""
        return len(self.terms) == 1

    def leading_term(self):
        if not self.terms:
            raise DegenerateInputError("leading term of the zero polynomial")
        return self.terms[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def leading_monomial(self):
        return self.leading_term()[0]

    def deg_in(self, i):
        if not self.terms:
            return MINUS_INFINITY
        k = i - 1
        return max(e[k] for e, _ in self.terms)

    def degrees(self):
        """Per-variable maximal exponents."""
        if not self.terms:
            return (0,) * self.ring.nvars
        return tuple(map(max, *(e for e, _ in self.terms))) if len(self.terms) > 1 else self.terms[0][0]

    def total_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e, _ in self.terms)

    def variables(self):
        """1-based indices of the variables that actually occur."""
        return {i + 1 for i, x in enumerate(self.degrees()) if x}

    def lowest_variable(self):
        """Smallest index i such that T_i occurs, or ``None`` for constants."""
        for i, x in enumerate(self.degrees()):
            if x:
                return i + 1
        return None

    def coeffs_in(self, i):
        """Coefficients of self as a polynomial in T_i: ``{degree: MPoly}``."""
        k = i - 1
        groups = {}
        for e, c in self.terms:
            n = e[k]
            if n:
                e = e[:k] + (0,) + e[k + 1:]
            groups.setdefault(n, []).append((e, c))
        # each group inherits the lex order of the parent once T_i is erased
        return {
            n: MPoly(self.ring, tuple(sorted(ts, key=_first, reverse=True)))
            for n, ts in groups.items()
        }

    def lc_in(self, i):
        if not self.terms:
            raise DegenerateInputError("leading coefficient of the zero polynomial")
        k = i - 1
        d = max(e[k] for e, _ in self.terms)
        ts = [(e[:k] + (0,) + e[k + 1:], c) for e, c in self.terms if e[k] == d]
        return MPoly(self.ring, tuple(sorted(ts, key=_first, reverse=True)))

    def evaluate(self, point):
        if len(point) != self.ring.nvars:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        ring = self.ring
        xs = [ring.scalar(x) for x in point]
        p = ring.characteristic
        total = ring.scalar(0)
        for e, c in self.terms:
            v = c
            for x, n in zip(xs, e):
                if n:
                    v = v * (pow(x, n, p) if p else x**n)
            total = total + v
            if p:
                total %= p
        return total

    def substitute(self, values):
        """Set the variables in ``values`` (``{index: scalar}``) to constants."""
        ring = self.ring
        p = ring.characteristic
        vals = {i - 1: ring.scalar(v) for i, v in values.items()}
        out = {}
        for e, c in self.terms:
            e = list(e)
            for k, x in vals.items():
                n = e[k]
                if n:
                    c = c * (pow(x, n, p) if p else x**n)
                    e[k] = 0
            if p:
                c %= p
            e = tuple(e)
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _from_dict(ring, out)

    # -- normalisation -----------------------------------------------------

    def primitive(self):
        """Canonical associate: integral, content 1 and positive leading
        coefficient over Q; monic over F_p. Zero stays zero."""
        if not self.terms:
            return self
        p = self.ring.characteristic
        lc = self.terms[0][1]
        if p:
            if lc == 1:
                return self
            return self.scale(pow(lc, -1, p))
        den = mpz(1)
        num = mpz(0)
        for _, c in self.terms:
            den = gmpy2.lcm(den, c.denominator)
            num = gmpy2.gcd(num, c.numerator)
        factor = mpq(den, num)
        if lc < 0:
            factor = -factor
        if factor == 1:
            return self
        return self.mul_term((0,) * self.ring.nvars, factor)

    def monic(self):
        if not self.terms:
            return self
        return self.mul_term((0,) * self.ring.nvars, self.ring.inv(self.terms[0][1]))

    # -- printing ----------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"


def format_monomial(exps, names):
    parts = []
    for name, n in zip(names, exps):
        if n == 1:
            parts.append(name)
        elif n:
            parts.append(f"{name}^{n}")
    return "*".join(parts)


def format_poly(f, names=None):
    """Canonical text form, parseable back when coefficients are integral."""
    names = names or f.ring.names
    if not f.terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(f.terms):
        neg = f.ring.characteristic == 0 and c < 0
        a = -c if neg else c
        mono = format_monomial(e, names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# module-level operations


def deg_in(f, i):
    return f.deg_in(i)


def lc_in(f, i):
    return f.lc_in(i)


def lex_leading_term(f):
    return f.leading_term()


def eval_point(f, x):
    return f.evaluate(x)


def monomial_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _scalar_div(ring, a, b):
    p = ring.characteristic
    return a / b if p == 0 else a * pow(b, -1, p) % p


def _sub_scaled(rem, ring, q, m, c):
    """In-place ``rem -= c * T^m * q`` on a term dict."""
    p = ring.characteristic
    adds = 0
    for e, a in q.terms:
        e2 = tuple(map(_add, e, m))
        v = a * c
        if e2 in rem:
            v = rem[e2] - v
            adds += 1
            if p:
                v %= p
            if v:
                rem[e2] = v
            else:
                del rem[e2]
        else:
            if p:
                v = -v % p
            else:
                v = -v
            rem[e2] = v
    COUNTERS.add("multiplications", len(q.terms))
    COUNTERS.add("additions", adds)


_UNDECIDED = object()


def _kronecker_quotient(f, q):
    """Exact division over Q through packed integers.

    With q scaled to a primitive integer polynomial and f to an integer one,
    an exact quotient has integer coefficients (Gauss's lemma), so packing
    turns the division into a single big-integer division. A nonzero
    integer remainder proves that q does not divide f. Otherwise the
    unpacked candidate is checked by multiplying back; if the slots were
    too narrow the caller falls back to term-by-term division.
    """
    radix = [d + 1 for d in f.degrees()]
    strides, length = _strides(radix)
    if length > 16 * len(f.terms) + 64:
        return _UNDECIDED
    df, fi = _integral(f.terms, strides)
    dq, qi = _integral(q.terms, strides)
    content = mpz(0)
    for _, c in qi:
        content = gmpy2.gcd(content, c)
    qi = [(i, c // content) for i, c in qi]
    fbits = max(int(abs(c)).bit_length() for _, c in fi)
    qbits = max(int(abs(c)).bit_length() for _, c in qi)
    ring = f.ring
    fint = MPoly(ring, tuple((e, mpq(c)) for (e, _), (_, c) in zip(f.terms, fi)))
    qint = MPoly(ring, tuple((e, mpq(c)) for (e, _), (_, c) in zip(q.terms, qi)))
    for attempt in (1, 2):
        width = ((max(fbits, qbits) + len(f.terms).bit_length() + 32) * attempt + 7) // 8
        fb = _pack(fi, length, width)
        qb = _pack(qi, length, width)
        h, rem = gmpy2.f_divmod(fb, qb)
        if rem:
            return None
        try:
            terms = _unpack(h, length, width, strides, mpq(1))
        except OverflowError:
            continue
        cand = MPoly(ring, tuple(terms))
        if cand.terms and qint * cand == fint:
            return cand.mul_term((0,) * ring.nvars, mpq(dq, df * content))
    return _UNDECIDED


def exact_quotient(f, q):
    """Return ``f / q`` if q divides f exactly, else ``None``.

    Exact division over Q is charged to the counters like the product
    ``q * (f / q)`` it inverts.
    """
    if not q.terms:
        raise DegenerateInputError("division by the zero polynomial")
    if q.ring != f.ring:
        raise ContextError("ring mismatch in exact_quotient")
    if not f.terms:
        return f
    ring = f.ring
    if q.is_constant():
        return f.mul_term(q.terms[0][0], ring.inv(q.terms[0][1]))
    lm, lcq = q.terms[0]
    if not monomial_divides(lm, f.terms[0][0]):
        return None
    if not monomial_divides(q.terms[-1][0], f.terms[-1][0]):
        return None
    if len(f.terms) == 1 and len(q.terms) > 1:
        return None
    if not monomial_divides(q.degrees(), f.degrees()):
        return None
    if not ring.characteristic and len(f.terms) * len(q.terms) >= _KRONECKER_MIN:
        fast = _kronecker_quotient(f, q)
        if fast is not _UNDECIDED:
            return fast
    rem = dict(f.terms)
    quot = {}
    while rem:
        e = max(rem)
        if not monomial_divides(lm, e):
            return None
        m = tuple(map(_sub, e, lm))
        c = _scalar_div(ring, rem[e], lcq)
        quot[m] = c
        _sub_scaled(rem, ring, q, m, c)
    return _from_dict(ring, quot)


def divides_poly(b, g):
    """True iff the polynomial b divides g exactly."""
    if not b.terms:
        raise DegenerateInputError("divisibility by the zero polynomial")
    return exact_quotient(g, b) is not None


def divide(f, divisors):
    """Multivariate division under lex.

    Returns ``(quotients, remainder)`` with ``f = sum(q_i * d_i) + remainder``
    and no term of the remainder divisible by any ``LT(d_i)``.
    """
    ring = f.ring
    divisors = [d for d in divisors]
    for d in divisors:
        if not d.terms:
            raise DegenerateInputError("division by the zero polynomial")
    heads = [d.terms[0] for d in divisors]
    quots = [{} for _ in divisors]
    rem = dict(f.terms)
    out = {}
    while rem:
        e = max(rem)
        c = rem[e]
        for idx, (lm, lc) in enumerate(heads):
            if monomial_divides(lm, e):
                m = tuple(map(_sub, e, lm))
                t = _scalar_div(ring, c, lc)
                quots[idx][m] = quots[idx].get(m, 0) + t
                _sub_scaled(rem, ring, divisors[idx], m, t)
                break
        else:
            out[e] = c
            del rem[e]
    qs = [ring.from_dict(q) for q in quots]
    return qs, _from_dict(ring, out)


def remainder(f, divisors):
    return divide(f, divisors)[1]


def pseudo_div(f, h, i, lazy=False):
    """Pseudo-division of f by h with respect to T_i.

    Returns ``(j, a, u)`` with ``lc_in(h, i)**j * f == a*h + u`` and
    ``deg_in(u, i) < deg_in(h, i)``. The default exponent is the classical
    ``max(deg_in(f, i) - deg_in(h, i) + 1, 0)``; with ``lazy=True`` j is the
    number of elimination steps actually performed, which can be smaller.
    """
    ring = f.ring
    if h.ring != ring:
        raise ContextError("ring mismatch in pseudo_div")
    dh = h.deg_in(i)
    if dh == MINUS_INFINITY or dh < 1:
        raise ContractError(f"divisor must have positive degree in {ring.names[i - 1]}")
    for poly, label in ((f, "dividend"), (h, "divisor")):
        low = poly.lowest_variable()
        if low is not None and low < i:
            raise ContractError(f"{label} involves a variable before {ring.names[i - 1]}")
    COUNTERS.add("pseudo_divisions")
    b = h.lc_in(i)
    df = f.deg_in(i)
    j_std = max(df - dh + 1, 0) if f else 0
    k = i - 1
    a = ring.zero()
    u = f
    steps = 0
    while u and u.deg_in(i) >= dh:
        du = u.deg_in(i)
        e = [0] * ring.nvars
        e[k] = du - dh
        t = u.lc_in(i).mul_term(tuple(e), ring.scalar(1))
        u = b * u - t * h
        a = b * a + t
        steps += 1
    if lazy:
        return steps, a, u
    if j_std > steps:
        extra = b ** (j_std - steps)
        a = a * extra
        u = u * extra
    return j_std, a, u


def reduce_set(F):
    """Interreduce a finite set of polynomials.

    Repeatedly replaces an element whose leading term is divisible by the
    leading term of another element with its remainder modulo the others.
    The result generates the same ideal, has pairwise non-dividing leading
    terms, and its leading-term ideal contains that of the input. Zero
    polynomials are dropped; elements are returned in primitive form. If a
    nonzero constant appears the result is ``[1]``.
    """
    polys = []
    seen = set()
    ring = None
    for f in F:
        ring = f.ring
        if not f:
            continue
        f = f.primitive()
        if f.is_constant():
            return [ring.one()]
        if f not in seen:
            seen.add(f)
            polys.append(f)
    while True:
        target = None
        for idx, f in enumerate(polys):
            lm = f.terms[0][0]
            for jdx, g in enumerate(polys):
                if jdx != idx and monomial_divides(g.terms[0][0], lm):
                    target = idx
                    break
            if target is not None:
                break
        if target is None:
            return polys
        f = polys.pop(target)
        seen.discard(f)
        r = remainder(f, polys)
        if r:
            r = r.primitive()
            if r.is_constant():
                return [ring.one()]
            if r not in seen:
                seen.add(r)
                polys.append(r)


def poly_arith(a, b, which):
    if which == "add":
        return a + b
    if which == "sub":
        return a - b
    if which == "mul":
        return a * b
    raise ValueError(f"unknown operation {which!r}")
