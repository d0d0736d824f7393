"""Query-counted oracle access and the execution backends.

Three backends share one control flow:

* REFERENCE: deterministic classical scans, exact answers, ledger counts
  every indexed read of the word.
* MODELED: same answers and ledger as REFERENCE, plus an accumulator of
  modeled quantum cost driven by the analytic worst-case recurrences.
* SAMPLED: search outcomes are flipped with probability eps, driving the
  majority-vote machinery; the ledger again counts real reads.
"""

from __future__ import annotations

import enum
import math
import random
import warnings
from contextlib import contextmanager
from fractions import Fraction

from .words import PaddedWord, Word


class Backend(enum.Enum):
    REFERENCE = "reference"
    MODELED = "modeled"
    SAMPLED = "sampled"


def repetition_factor(eps: float) -> int:
    """Smallest odd r whose r-trial majority has failure probability below eps.

    A single error-free trial suffices at eps = 0.
    """
    if eps < 0 or eps >= 0.5:
        raise ValueError("eps must lie in [0, 0.5)")
    if eps == 0:
        return 1
    r = 1
    while True:
        half = r // 2 + 1
        tail = sum(
            math.comb(r, t) * eps**t * (1 - eps) ** (r - t) for t in range(half, r + 1)
        )
        if tail < eps:
            return r
        r += 2


class CostModel:
    """Constants for the modeled-cost recurrences.

    c1 scales threshold-search charges, c2 scales amplified choices, and the
    repetition factor models boosting a constant-error subroutine back below
    eps by majority vote.
    """

    def __init__(self, c1: int | Fraction = 1, c2: int | Fraction = 1, repetition: int | None = None):
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)
        self.repetition = repetition

    def rep(self, eps: float) -> int:
        if self.repetition is not None:
            return self.repetition
        return repetition_factor(eps)


class ExecutionContext:
    """Oracle wrapper owned by a single algorithm run.

    Carries the word, the backend mode, the query ledger, the modeled-cost
    accumulator, the cost constants, the fault-injection rate, and the seeded
    RNG.  Not meant to be shared across concurrent runs.
    """

    def __init__(
        self,
        word: Word | PaddedWord,
        backend: Backend = Backend.REFERENCE,
        *,
        epsilon: float = 0.0,
        seed: int = 0,
        cost_model: CostModel | None = None,
        adversarial: bool = False,
    ):
        if backend is not Backend.SAMPLED and epsilon != 0.0:
            raise ValueError("epsilon must be 0 unless the backend is SAMPLED")
        if epsilon < 0 or epsilon >= 0.5:
            raise ValueError("epsilon must lie in [0, 0.5)")
        self.word = word
        self.backend = backend
        self.epsilon = epsilon
        self.seed = seed
        self.rng = random.Random(seed)
        self.cost_model = cost_model if cost_model is not None else CostModel()
        self.adversarial = adversarial
        self.ledger = 0
        self.modeled_cost = Fraction(0)
        self.trace: list[tuple] | None = None
        # Optional pure-answer memo for REFERENCE sweeps; when enabled the
        # ledger no longer reflects reads, so tests that assert ledgers must
        # leave it off.
        self.memo: dict | None = None
        self._modeled_depth = 0

    def read(self, i: int) -> int:
        """Read bit i; every read of a non-virtual symbol costs one query."""
        n = len(self.word)
        if i < 0 or i >= n:
            raise IndexError(f"oracle read out of range: {i} not in [0, {n})")
        if not self.word.is_virtual(i):
            self.ledger += 1
        return self.word.bit(i)

    def charge_modeled(self, amount: Fraction | int) -> None:
        """Accumulate modeled cost; a no-op with a warning off the MODELED backend."""
        if self.backend is not Backend.MODELED:
            warnings.warn("charge_modeled called off the MODELED backend; ignored", stacklevel=2)
            return
        amount = Fraction(amount)
        if amount < 0:
            raise ValueError("modeled charges must be nonnegative")
        self.modeled_cost += amount

    @contextmanager
    def modeled_scope(self, amount):
        """Charge a worst-case analytic cost once at the outermost call.

        Nested scopes do not charge again: the outermost recurrence already
        accounts for the whole call tree beneath it.  `amount` may be a
        zero-argument callable so nested calls skip evaluating recurrences.
        """
        if self.backend is Backend.MODELED and self._modeled_depth == 0:
            value = amount() if callable(amount) else amount
            self.modeled_cost += Fraction(value)
        self._modeled_depth += 1
        try:
            yield
        finally:
            self._modeled_depth -= 1

    def flip(self) -> bool:
        """One epsilon-biased coin; only the SAMPLED backend ever flips."""
        return self.backend is Backend.SAMPLED and self.rng.random() < self.epsilon

    def rounded_modeled_cost(self) -> int:
        return int(round(float(self.modeled_cost)))
