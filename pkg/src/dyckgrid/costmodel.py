"""Analytic worst-case cost recurrences for the search family.

The quantum routines cannot be executed, but their worst-case query costs
follow mechanically from the call tree: threshold searches cost
c1 * ceil(sqrt(N/T)) child calls, amplified choices cost c2 * ceil(sqrt(M)),
the first-match binary search repeats its two probes 2u times at iteration u,
and boosting a recursive call back below the target error costs a repetition
factor.  Costs are exact rationals; windows shrink geometrically, so the
tables stay small under memoization.
"""

from __future__ import annotations

from fractions import Fraction

from .oracle import CostModel
from .search import ceil_sqrt, ceil_sqrt_ratio


def ladder_rungs(k: int, span: int, cover: bool) -> list[int]:
    """Doubling ladder of candidate lengths for a window of extent `span`.

    Rungs are powers of two from the first at least k.  The plain ladder tops
    out at 2**ceil(log2(span)); the covering ladder adds one more doubling
    when needed so its top reaches past the window extent, which maximal-d
    selection requires to lock onto the leftmost match.
    """
    if span < 1:
        return []
    jmin = (k - 1).bit_length()
    jmax = span.bit_length() if cover else (span - 1).bit_length()
    if jmax < jmin:
        return []
    return [1 << j for j in range(jmin, jmax + 1)]


class CostTables:
    """Memoized evaluation of the modeled-cost recurrences."""

    def __init__(self, cost_model: CostModel, repetition: int):
        self.c1 = cost_model.c1
        self.c2 = cost_model.c2
        self.rep = repetition
        self._from: dict[tuple[int, int, int], Fraction] = {}
        self._first: dict[tuple[int, int], Fraction] = {}
        self._any: dict[tuple[int, int], Fraction] = {}
        self._fixedpos: dict[tuple[int, int], Fraction] = {}

    def cost_from(self, k: int, d: int, w: int) -> Fraction:
        if k == 2:
            return Fraction(3)
        key = (k, d, w)
        hit = self._from.get(key)
        if hit is None:
            if d < 2:
                hit = Fraction(0)
            else:
                hit = self.rep * (
                    3 * self.cost_from(k - 1, d - 1, w)
                    + 3 * self.cost_first(k - 1, min(2 * d, w))
                )
            self._from[key] = hit
        return hit

    def cost_fixed_len(self, k: int, d: int, w: int) -> Fraction:
        half = (d + 1) // 2
        return self.c1 * ceil_sqrt_ratio(w, half) * self.cost_from(k, d, w)

    def cost_any(self, k: int, w: int) -> Fraction:
        key = (k, w)
        hit = self._any.get(key)
        if hit is None:
            rungs = ladder_rungs(k, w - 1, cover=False)
            if not rungs:
                hit = Fraction(0)
            else:
                worst = max(self.cost_fixed_len(k, min(dd, w), w) for dd in rungs)
                hit = self.c2 * ceil_sqrt(len(rungs)) * worst
            self._any[key] = hit
        return hit

    def cost_fixed_pos(self, k: int, w: int) -> Fraction:
        key = (k, w)
        hit = self._fixedpos.get(key)
        if hit is None:
            rungs = ladder_rungs(k, w - 1, cover=True)
            if not rungs:
                hit = Fraction(0)
            else:
                worst = max(self.cost_from(k, min(dd, w), w) for dd in rungs)
                # one amplified pass finds a workable d, a second maximizes it
                hit = 2 * self.c2 * ceil_sqrt(len(rungs)) * worst
            self._fixedpos[key] = hit
        return hit

    def cost_first(self, k: int, w: int) -> Fraction:
        key = (k, w)
        hit = self._first.get(key)
        if hit is None:
            total = Fraction(0)
            iters = (w - 1).bit_length() if w >= 1 else 0
            for u in range(1, iters + 1):
                wu = (w + (1 << (u - 1)) - 1) >> (u - 1)
                total += 2 * u * (self.cost_any(k, wu) + self.cost_fixed_pos(k, wu))
            self._first[key] = total
            hit = total
        return hit

    def cost_dyck(self, k: int, n: int) -> Fraction:
        if n == 0:
            return Fraction(0)
        keff = (n + 1) // 2 if 2 * k >= n else k
        return self.cost_any(keff + 1, n + 2 * keff)


def make_cost_tables(c1=1, c2=1, eps: float = 0.0, repetition: int | None = None) -> CostTables:
    model = CostModel(c1, c2, repetition)
    return CostTables(model, model.rep(eps))
