"""Turning a semi-triangular system into a triangle mush of triangular ones.

The driver explores systems depth first, siblings in creation order. Each step interreduces the unsorted
equations and then applies one operation at the current variable T_{k+1}:

* two or more unsorted members involve T_{k+1}: case split on the leading
  coefficient b of the lowest-degree member h, then pseudo-divide another
  member by h in the branch where b != 0;
* exactly one member f involves T_{k+1}: move it to the sorted part when
  its leading coefficient already divides g, otherwise split on the
  vanishing pattern of its coefficients;
* none does: advance k.

Systems reaching k = r are handed to an optional callback that can keep
them, drop them, or stop the whole run.
"""

from __future__ import annotations

import enum
import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import ResourceLimitError
from .polyring import format_poly, reduce_set
from .stats import COUNTERS
from .systems import (
    SemiTriSystem,
    check_invariants,
    op_advance,
    op_case_split,
    op_division,
    op_last_poly,
    op_sort,
    op_strip,
)


class Verdict(enum.Enum):
    KEEP = "keep"
    PRUNE = "prune"
    ANSWER = "answer"


@dataclass
class TraceRecord:
    op: str
    inp: int
    out: tuple = ()
    data: dict = field(default_factory=dict)

    def format(self, names=None):
        out = ",".join(str(i) for i in self.out) or "-"
        parts = [f"TRACE op={self.op} in={self.inp} out={out}"]
        for key, val in self.data.items():
            if hasattr(val, "terms"):
                val = format_poly(val, names)
            parts.append(f"{key}={str(val).replace(' ', '')}")
        return " ".join(parts)


class Budget:
    """Wall-clock and system-count limits shared by one run."""

    def __init__(self, timeout=None, max_systems=None):
        self.timeout = timeout
        self.max_systems = max_systems
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self.created = 0

    def check(self):
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise ResourceLimitError(
                f"time limit of {self.timeout}s exceeded", "timeout", COUNTERS.snapshot()
            )

    def count(self, n):
        self.created += n
        if self.max_systems is not None and self.created > self.max_systems:
            raise ResourceLimitError(
                f"more than {self.max_systems} systems created", "systems", COUNTERS.snapshot()
            )


@dataclass
class Triangulation:
    """Outcome of :func:`make_triangular`.

    ``systems`` are the triangular systems kept; ``answer`` is the system
    on which the callback stopped the run, if any.
    """

    systems: list
    answer: object = None
    examined: int = 0


def _rank(S, i):
    order = {f: n for n, f in enumerate(S.unsorted)}
    return lambda f: (f.deg_in(i), len(f.terms), order[f])


def step(S, lazy=True, strip=False):
    """One rewriting step on a system with k < r.

    With ``strip`` the unsorted members are first divided by any factor
    they share with the inequation.

    Returns ``(op, children, data)``; ``op`` names the operation applied.
    A system whose interreduction exposes a nonzero constant yields
    ``("prune", [], {})``.
    """
    i = S.k + 1
    if strip:
        S = op_strip(S)
    if S.unsorted and not S.is_dead():
        reduced = reduce_set(S.unsorted)
        if tuple(reduced) != S.unsorted:
            S = S.replace(unsorted=reduced)
    if S.is_dead():
        return "prune", [], {}
    act = S.active()
    if len(act) >= 2:
        rank = _rank(S, i)
        h = min(act, key=rank)
        f = min((p for p in act if p is not h), key=rank)
        b = h.lc_in(i)
        data = {"var": S.ring.names[i - 1], "divisor": h, "dividend": f}
        if b.is_constant():
            out, data["remainder"] = op_division(S, f, h, lazy, with_remainder=True)
            return "division", out, data
        with_b, without_b = op_case_split(S, b, [b])
        out, data["remainder"] = op_division(without_b, f, h, lazy, with_remainder=True)
        data["split"] = b
        return "division", out + [with_b], data
    if len(act) == 1:
        f = act[0]
        if S.ineq.certify(f.lc_in(i)):
            return "sort", op_sort(S, f), {"moved": f}
        return "last_poly", op_last_poly(S, f), {"poly": f}
    return "advance", op_advance(S), {}


def make_triangular(
    systems,
    eager=None,
    *,
    lazy=True,
    strip=False,
    jobs=1,
    budget=None,
    tracer=None,
    validate=False,
    expand_g=False,
):
    """Rewrite a triangle mush until every member is triangular.

    ``eager`` is called on each system as soon as it becomes triangular and
    returns a :class:`Verdict`. ``strip`` enables the removal of inequation
    factors from unsorted members before each step. Without a callback every triangular system
    is kept. Systems are identified by ids assigned in creation order; the
    inputs get ids 0, 1, .... With ``jobs > 1`` worklist entries are
    expanded in parallel rounds and the id assignment is no longer
    reproducible.
    """
    if isinstance(systems, SemiTriSystem):
        systems = [systems]
    budget = budget or Budget()
    ids = itertools.count()
    kept = []
    found = []
    examined = [0]

    def emit(rec):
        if tracer is not None:
            tracer(rec)

    def settle(S):
        """Route a fresh system: dead, triangular or back to the worklist."""
        if S.is_dead():
            emit(TraceRecord("prune", S.sid, (), {"reason": "constant"}))
            return None
        if S.k < S.r:
            return S
        examined[0] += 1
        COUNTERS.add("systems_examined")
        verdict = Verdict.KEEP if eager is None else eager(S)
        if verdict is Verdict.ANSWER:
            found.append(S)
        elif verdict is Verdict.KEEP:
            kept.append(S)
        return None

    def expand(S):
        budget.check()
        op, children, data = step(S, lazy=lazy, strip=strip)
        children = [c.with_id(next(ids)) for c in children]
        COUNTERS.add("systems_created", len(children))
        budget.count(len(children))
        if validate:
            for c in children:
                problems = check_invariants(c, expand_g)
                if problems:
                    raise AssertionError(f"system {c.sid}: {'; '.join(problems)}")
        emit(TraceRecord(op, S.sid, tuple(c.sid for c in children), data))
        todo = []
        for c in children:
            if found:
                break
            nxt = settle(c)
            if nxt is not None:
                todo.append(nxt)
        return todo

    stack = []
    for S in systems:
        S = S.with_id(next(ids))
        COUNTERS.add("systems_created")
        budget.count(1)
        nxt = settle(S)
        if found:
            break
        if nxt is not None:
            stack.append(nxt)
    # depth first; siblings are expanded in creation order
    stack.reverse()
    if jobs <= 1:
        while stack and not found:
            todo = expand(stack.pop())
            stack.extend(reversed(todo))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            while stack and not found:
                batch = [stack.pop() for _ in range(min(jobs, len(stack)))]
                for todo in pool.map(expand, batch):
                    stack.extend(reversed(todo))
    return Triangulation(kept, found[0] if found else None, examined[0])
