"""Operation counting.

Algorithms charge work to the *active* counter, selected per thread (and per
task) through a context variable, so concurrent runs never share counts.
One ground-field operation is one step.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, field
from typing import Dict

COUNTER_FIELDS = (
    "field_ops",
    "reduction_steps",
    "divisibility_tests",
    "pairs_generated",
    "pairs_syzygy",
    "pairs_rewritten",
    "pairs_zero",
    "pairs_basis",
    "signature_drift",
)


@dataclass
class OpCounter:
    field_ops: int = 0
    reduction_steps: int = 0
    divisibility_tests: int = 0
    pairs_generated: int = 0
    pairs_syzygy: int = 0
    pairs_rewritten: int = 0
    pairs_zero: int = 0
    pairs_basis: int = 0
    # literal-mode reductions whose reducer signature was not below the target
    signature_drift: int = 0
    phase_ops: Dict[str, int] = field(default_factory=dict)
    _phase: str = field(default="other", repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def add(self, name: str, k: int = 1):
        with self._lock:
            setattr(self, name, getattr(self, name) + k)

    def field(self, k: int):
        with self._lock:
            self.field_ops += k
            self.phase_ops[self._phase] = self.phase_ops.get(self._phase, 0) + k

    @contextmanager
    def phase(self, name: str):
        old, self._phase = self._phase, name
        try:
            yield self
        finally:
            self._phase = old

    @property
    def pairs_discarded(self) -> int:
        return self.pairs_syzygy + self.pairs_rewritten

    def conserved(self) -> bool:
        """Every generated pair is discarded, reduces to zero, or adds a basis element."""
        return self.pairs_generated == self.pairs_discarded + self.pairs_zero + self.pairs_basis

    def as_dict(self) -> dict:
        d = {name: getattr(self, name) for name in COUNTER_FIELDS}
        d["pairs_discarded"] = self.pairs_discarded
        d["phase_field_ops"] = dict(sorted(self.phase_ops.items()))
        return d


_GLOBAL = OpCounter()
_ACTIVE: ContextVar = ContextVar("fastgb_counter", default=None)


def active_counter() -> OpCounter:
    c = _ACTIVE.get()
    return _GLOBAL if c is None else c


@contextmanager
def counting(counter: OpCounter = None):
    """Route all charges inside the block to ``counter`` (a fresh one by default)."""
    counter = OpCounter() if counter is None else counter
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)
