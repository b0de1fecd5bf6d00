"""Process-wide operation counters.

Additions and multiplications count coefficient-field operations performed
inside polynomial arithmetic. Increments are batched per polynomial
operation and guarded by a lock so worker threads can share the totals.
"""

import threading

COUNTER_NAMES = (
    "additions",
    "multiplications",
    "pseudo_divisions",
    "systems_created",
    "minpoly_calls",
    "systems_examined",
)


class Counters:
    def __init__(self):
        self._lock = threading.Lock()
        self._values = dict.fromkeys(COUNTER_NAMES, 0)

    def add(self, name, n=1):
        if n:
            with self._lock:
                self._values[name] += n

    def reset(self):
        with self._lock:
            for name in self._values:
                self._values[name] = 0

    def snapshot(self):
        with self._lock:
            return dict(self._values)

    def __getitem__(self, name):
        return self._values[name]


COUNTERS = Counters()
