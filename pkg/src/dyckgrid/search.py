"""Bounded-error search primitives.

Each primitive takes an ordered family of zero-argument procedures returning
a value or None.  REFERENCE and MODELED evaluate deterministically and
short-circuit; MODELED additionally charges the analytic quantum cost of the
search.  SAMPLED degrades the exact outcome per the bounded-error contract:
a found result is dropped with probability eps, so errors compose upward
exactly as a bounded-error black box would.
"""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence, TypeVar

from .oracle import Backend, ExecutionContext

V = TypeVar("V")

Procedure = Callable[[], Optional[V]]


def ceil_sqrt(n: int) -> int:
    if n <= 0:
        return 0
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def ceil_sqrt_ratio(num: int, den: int) -> int:
    """Smallest integer m with m*m >= num/den."""
    if num <= 0:
        return 0
    m = math.isqrt((num + den - 1) // den)
    while m * m * den < num:
        m += 1
    while m > 0 and (m - 1) * (m - 1) * den >= num:
        m -= 1
    return m


def threshold_search(
    ctx: ExecutionContext,
    predicates: Sequence[Procedure],
    threshold: int,
    unit_cost=1,
):
    """Find an index whose procedure succeeds, tuned for >= threshold successes.

    Returns (index, value) of the least succeeding procedure, or None.  The
    guarantee only holds when there are at least `threshold` successes or
    none at all; anything may come back in between.  Modeled charge:
    c1 * ceil(sqrt(N / threshold)) times the worst single-procedure cost.
    """
    n = len(predicates)
    if n < 1:
        raise ValueError("the predicate family must be nonempty")
    if threshold < 1 or threshold > n:
        raise ValueError("threshold must lie in [1, N]")

    if ctx.backend is Backend.MODELED and ctx._modeled_depth == 0:
        ctx.charge_modeled(ctx.cost_model.c1 * ceil_sqrt_ratio(n, threshold) * unit_cost)
    if ctx.backend is Backend.SAMPLED and ctx.adversarial:
        values = [p() for p in predicates]
        hits = [i for i, v in enumerate(values) if v is not None]
        if not hits:
            return None
        if len(hits) < threshold:
            j = ctx.rng.randrange(n)
            return (j, values[j]) if values[j] is not None else None
        if ctx.flip():
            return None
        i = hits[0]
        return (i, values[i])

    sampled = ctx.backend is Backend.SAMPLED
    for i, p in enumerate(predicates):
        v = p()
        if v is not None:
            if sampled and ctx.flip():
                return None
            return (i, v)
    return None


def amplified_first_success(
    ctx: ExecutionContext,
    candidates: Sequence[Procedure],
    unit_cost=1,
):
    """First non-None candidate value in order, amplified over M candidates.

    Modeled charge: c2 * ceil(sqrt(M)) times the worst candidate cost.  Under
    SAMPLED each candidate outcome is flipped to None with probability eps
    before selection.
    """
    m = len(candidates)
    if m < 1:
        raise ValueError("the candidate family must be nonempty")
    if ctx.backend is Backend.MODELED and ctx._modeled_depth == 0:
        ctx.charge_modeled(ctx.cost_model.c2 * ceil_sqrt(m) * unit_cost)
    sampled = ctx.backend is Backend.SAMPLED
    for cand in candidates:
        v = cand()
        if v is not None and not (sampled and ctx.flip()):
            return v
    return None


def max_param_search(
    ctx: ExecutionContext,
    candidates: Sequence[Procedure],
    unit_cost=1,
):
    """(index, value) of the largest succeeding candidate, or None.

    Same modeled charge as amplified_first_success.  Evaluation runs from the
    top index down and stops at the first success, which is the maximal one.
    """
    m = len(candidates)
    if m < 1:
        raise ValueError("the candidate family must be nonempty")
    if ctx.backend is Backend.MODELED and ctx._modeled_depth == 0:
        ctx.charge_modeled(ctx.cost_model.c2 * ceil_sqrt(m) * unit_cost)
    sampled = ctx.backend is Backend.SAMPLED
    for i in range(m - 1, -1, -1):
        v = candidates[i]()
        if v is not None and not (sampled and ctx.flip()):
            return (i, v)
    return None
