"""The recursive search family for minimal +k/-k substrings.

Finding a +k or -k substring reduces to finding two consecutive minimal
(k-1)-substrings of equal sign: their union is then a minimal k-substring of
that sign.  The entry points below realize that recursion together with the
window machinery that keeps each call's query budget proportional to the
length bound d:

* find_from / find_from_right: leftmost / rightmost minimal match through a
  fixed anchor position t, of length at most d;
* find_fixed_len: any match, tuned for lengths in [d/2, d], via threshold
  search over anchors;
* find_any: any match, via an amplified sweep of the doubling length ladder;
* find_fixed_pos: leftmost/rightmost match through t, via maximal-d search;
* find_first: first match in a direction, via bounded-error binary search
  with majority-vote repetition.

REFERENCE and MODELED run the full recursion as deterministic scans.
SAMPLED treats find_from/find_from_right as the bounded-error black boxes
they are specified to be (exact answer from the word's minimal-substring
index, flipped with probability eps) while the layers above them, including
the binary search and its majority votes, execute literally.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import partial

from .costmodel import CostTables, ladder_rungs
from .oracle import Backend, ExecutionContext
from .search import amplified_first_success, max_param_search, threshold_search
from .words import BOTH_SIGNS, SubstringMatch


class Direction(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class SearchParams:
    """Window and filter parameters shared by the search family."""

    l: int
    r: int
    t: int | None = None
    d: int | None = None
    s: frozenset = BOTH_SIGNS
    direction: Direction = Direction.RIGHT

    def validate(self, n: int, *, need_t: bool = False, need_d: bool = False) -> None:
        if not (0 <= self.l <= self.r < n):
            raise ValueError(f"window [{self.l}, {self.r}] invalid for word length {n}")
        if need_t and (self.t is None or not (self.l <= self.t <= self.r)):
            raise ValueError("anchor t must lie inside the window")
        if need_d and (self.d is None or not (0 < self.d <= self.r - self.l + 1)):
            raise ValueError("length bound d must lie in (0, window size]")
        if not self.s or not self.s <= BOTH_SIGNS:
            raise ValueError("sign set must be a nonempty subset of {+1, -1}")


_PLUS, _MINUS, _BOTH = 1, 2, 3

# When the leftward glue of two consecutive (k-1)-matches fails the length
# bound, the rightward glue may still satisfy it; retrying keeps the result
# equal to the brute-force leftmost selection on chain configurations.
RETRY_OTHER_SIDE = True


def _mask(s) -> int:
    m = 0
    if 1 in s:
        m |= _PLUS
    if -1 in s:
        m |= _MINUS
    if m == 0:
        raise ValueError("empty sign set")
    return m


def _sign_bit(sig: int) -> int:
    return _PLUS if sig > 0 else _MINUS


def _tables(ctx: ExecutionContext) -> CostTables:
    tables = getattr(ctx, "_cost_tables", None)
    if tables is None:
        tables = CostTables(ctx.cost_model, ctx.cost_model.rep(ctx.epsilon))
        ctx._cost_tables = tables
    return tables


# ---------------------------------------------------------------------------
# exact lookups against the word's minimal-substring index (SAMPLED backend)


def _depth_index(ctx: ExecutionContext, k: int):
    cache = getattr(ctx, "_depth_cache", None)
    if cache is None:
        cache = {}
        ctx._depth_cache = cache
    word_key = ctx.word.key()
    per_word = cache.get(word_key)
    if per_word is None:
        from .words import minimal_substrings_by_depth

        per_word = minimal_substrings_by_depth(word_key)
        cache[word_key] = per_word
    return per_word.get(k, ())


def _exact_from(ctx, k, l, r, t, d, mask, rightmost):
    best = None
    for m in _depth_index(ctx, k):
        if m.i > t:
            break
        if m.j < t or m.i < l or m.j > r or m.j - m.i + 1 > d:
            continue
        if not (_sign_bit(m.sign) & mask):
            continue
        if rightmost:
            best = m
        else:
            return m
    return best


# ---------------------------------------------------------------------------
# anchored search: find_from and its mirror


def _base_from(ctx, l, r, t, d, mask, right_first):
    if d < 2:
        return None
    xt = None
    order = ((t, t + 1), (t - 1, t)) if right_first else ((t - 1, t), (t, t + 1))
    for a, b in order:
        if a < l or b > r:
            continue
        if xt is None:
            xt = ctx.read(t)
        other = ctx.read(a if a != t else b)
        if other == xt:
            sig = 1 if xt == 0 else -1
            if _sign_bit(sig) & mask:
                return (a, b, sig)
    return None


def _find_from(ctx, k, l, r, t, d, mask, rightmost=False):
    if ctx.backend is Backend.SAMPLED:
        m = _exact_from(ctx, k, l, r, t, d, mask, rightmost)
        if m is None or ctx.flip():
            return None
        return (m.i, m.j, m.sign)
    memo = ctx.memo
    if memo is not None:
        key = (1 if rightmost else 0, k, l, r, t, d, mask)
        hit = memo.get(key, memo)
        if hit is not memo:
            return hit
    res = _find_from_impl(ctx, k, l, r, t, d, mask, rightmost)
    if memo is not None:
        memo[key] = res
    return res


def _find_from_impl(ctx, k, l, r, t, d, mask, rightmost):
    if k == 2:
        return _base_from(ctx, l, r, t, d, mask, right_first=rightmost)

    anchor = _find_from(ctx, k - 1, l, r, t, d - 1, _BOTH, rightmost) if d >= 2 else None
    if anchor is not None:
        i1, j1, s1 = anchor
        partner = _extend(ctx, k, l, r, i1, j1, s1, d, toward_left=not rightmost)
        if partner is None or (
            RETRY_OTHER_SIDE and not _glue_fits(anchor, partner, d)
        ):
            fallback = _extend(ctx, k, l, r, i1, j1, s1, d, toward_left=rightmost)
            if partner is None or (
                fallback is not None and _glue_fits(anchor, fallback, d)
            ):
                partner = fallback
        if partner is None:
            return None
        i2, j2, s2 = partner
    else:
        first = Direction.LEFT if rightmost else Direction.RIGHT
        if first is Direction.RIGHT:
            hi = min(t + d - 1, r)
            one = _find_first(ctx, k - 1, t, hi, _BOTH, Direction.RIGHT) if t <= hi else None
            if one is None:
                return None
            lo = max(l, t - d + 1)
            two = _find_first(ctx, k - 1, lo, t, _BOTH, Direction.LEFT) if lo <= t else None
        else:
            lo = max(l, t - d + 1)
            one = _find_first(ctx, k - 1, lo, t, _BOTH, Direction.LEFT) if lo <= t else None
            if one is None:
                return None
            hi = min(t + d - 1, r)
            two = _find_first(ctx, k - 1, t, hi, _BOTH, Direction.RIGHT) if t <= hi else None
        if two is None:
            return None
        i1, j1, s1 = one
        i2, j2, s2 = two

    if s1 == s2 and (_sign_bit(s1) & mask) and max(j1, j2) - min(i1, i2) + 1 <= d:
        res = (min(i1, i2), max(j1, j2), s1)
        if ctx.trace is not None and k >= 3:
            ctx.trace.append((k, (i1, j1, s1), (i2, j2, s2), res))
        return res
    return None


def _glue_fits(a, b, d) -> bool:
    return a[2] == b[2] and max(a[1], b[1]) - min(a[0], b[0]) + 1 <= d


def _extend(ctx, k, l, r, i1, j1, s1, d, toward_left):
    """Locate the consecutive neighbor of [i1, j1] on one side.

    Tries the anchored search just past the end first (the overlapping case),
    then a directional first-match search within the length budget.
    """
    if toward_left:
        if i1 - 1 >= l:
            v = _find_from(ctx, k - 1, l, r, i1 - 1, d - 1, _BOTH, rightmost=True)
            if v is not None:
                return v if v[2] == s1 else None
        lo = max(l, j1 - d + 1)
        if lo <= i1 - 1:
            v = _find_first(ctx, k - 1, lo, i1 - 1, _BOTH, Direction.LEFT)
            if v is not None and v[2] == s1:
                return v
        return None
    if j1 + 1 <= r:
        v = _find_from(ctx, k - 1, l, r, j1 + 1, d - 1, _BOTH, rightmost=False)
        if v is not None:
            return v
    hi = min(i1 + d - 1, r)
    if j1 + 1 <= hi:
        return _find_first(ctx, k - 1, j1 + 1, hi, _BOTH, Direction.RIGHT)
    return None


# ---------------------------------------------------------------------------
# window-wide searches


def _find_fixed_len(ctx, k, l, r, d, mask):
    memo = ctx.memo
    if memo is not None:
        key = (2, k, l, r, d, mask)
        hit = memo.get(key, memo)
        if hit is not memo:
            return hit
    preds = [partial(_find_from, ctx, k, l, r, t, d, mask) for t in range(l, r + 1)]
    found = threshold_search(ctx, preds, (d + 1) // 2)
    res = found[1] if found is not None else None
    if memo is not None:
        memo[key] = res
    return res


def _find_any(ctx, k, l, r, mask):
    memo = ctx.memo
    if memo is not None:
        key = (3, k, l, r, mask)
        hit = memo.get(key, memo)
        if hit is not memo:
            return hit
    rungs = ladder_rungs(k, r - l, cover=False)
    if not rungs:
        res = None
    else:
        wlen = r - l + 1
        cands = [partial(_find_fixed_len, ctx, k, l, r, min(dd, wlen), mask) for dd in rungs]
        res = amplified_first_success(ctx, cands)
    if memo is not None:
        memo[key] = res
    return res


def _find_fixed_pos(ctx, k, l, r, t, mask, direction):
    memo = ctx.memo
    if memo is not None:
        key = (4, k, l, r, t, mask, direction is Direction.LEFT)
        hit = memo.get(key, memo)
        if hit is not memo:
            return hit
    rungs = ladder_rungs(k, r - l, cover=True)
    if not rungs:
        res = None
    else:
        wlen = r - l + 1
        rightmost = direction is Direction.RIGHT
        cands = [
            partial(_find_from, ctx, k, l, r, t, min(dd, wlen), mask, rightmost)
            for dd in rungs
        ]
        found = max_param_search(ctx, cands)
        res = found[1] if found is not None else None
    if memo is not None:
        memo[key] = res
    return res


def _majority(ctx, run, reps):
    votes = Counter(run() for _ in range(reps))
    ranked = votes.most_common(2)
    if len(ranked) > 1 and ranked[0][1] == ranked[1][1]:
        return None
    return ranked[0][0]


def _find_first(ctx, k, l, r, mask, direction):
    memo = ctx.memo
    if memo is not None:
        key = (5, k, l, r, mask, direction is Direction.LEFT)
        hit = memo.get(key, memo)
        if hit is not memo:
            return hit
    res = _find_first_impl(ctx, k, l, r, mask, direction)
    if memo is not None:
        memo[key] = res
    return res


def _find_first_impl(ctx, k, l, r, mask, direction):
    lb, rb = l, r
    depth = 0
    sampled = ctx.backend is Backend.SAMPLED
    while lb + 1 < rb:
        depth += 1
        mid = (lb + rb) // 2
        if direction is Direction.RIGHT:
            if sampled:
                va = _majority(ctx, lambda: _find_any(ctx, k, lb, mid, mask), 2 * depth)
            else:
                va = _find_any(ctx, k, lb, mid, mask)
            if va is not None:
                rb = mid
                continue
            if sampled:
                vm = _majority(
                    ctx,
                    lambda: _find_fixed_pos(ctx, k, lb, rb, mid, mask, Direction.LEFT),
                    2 * depth,
                )
            else:
                vm = _find_fixed_pos(ctx, k, lb, rb, mid, mask, Direction.LEFT)
            if vm is not None:
                return vm
            lb = mid + 1
        else:
            if sampled:
                va = _majority(ctx, lambda: _find_any(ctx, k, mid, rb, mask), 2 * depth)
            else:
                va = _find_any(ctx, k, mid, rb, mask)
            if va is not None:
                lb = mid
                continue
            if sampled:
                vm = _majority(
                    ctx,
                    lambda: _find_fixed_pos(ctx, k, lb, rb, mid, mask, Direction.RIGHT),
                    2 * depth,
                )
            else:
                vm = _find_fixed_pos(ctx, k, lb, rb, mid, mask, Direction.RIGHT)
            if vm is not None:
                return vm
            rb = mid - 1
    if rb < lb:
        return None
    width = rb - lb + 1
    if direction is Direction.RIGHT:
        return _find_from(ctx, k, lb, rb, lb, width, mask)
    return _find_from(ctx, k, lb, rb, rb, width, mask, rightmost=True)


# ---------------------------------------------------------------------------
# public entry points


def _check(ctx, k, p: SearchParams, *, need_t=False, need_d=False):
    if k < 2:
        raise ValueError("substring search needs k >= 2")
    p.validate(len(ctx.word), need_t=need_t, need_d=need_d)
    return _mask(p.s)


def _wrap(res):
    return SubstringMatch(*res) if res is not None else None


def _run_charged(ctx, charge, run):
    # entering the charging scope matters only on the MODELED backend
    if ctx.backend is not Backend.MODELED:
        return run()
    with ctx.modeled_scope(charge):
        return run()


def find_from(ctx: ExecutionContext, k: int, p: SearchParams):
    """Leftmost minimal +k/-k substring through t, of length at most d."""
    mask = _check(ctx, k, p, need_t=True, need_d=True)
    return _wrap(_run_charged(
        ctx,
        lambda: _tables(ctx).cost_from(k, p.d, p.r - p.l + 1),
        lambda: _find_from(ctx, k, p.l, p.r, p.t, p.d, mask),
    ))


def find_from_right(ctx: ExecutionContext, k: int, p: SearchParams):
    """Rightmost minimal +k/-k substring through t, of length at most d."""
    mask = _check(ctx, k, p, need_t=True, need_d=True)
    return _wrap(_run_charged(
        ctx,
        lambda: _tables(ctx).cost_from(k, p.d, p.r - p.l + 1),
        lambda: _find_from(ctx, k, p.l, p.r, p.t, p.d, mask, rightmost=True),
    ))


def find_fixed_len(ctx: ExecutionContext, k: int, l: int, r: int, d: int, s=BOTH_SIGNS):
    """Any minimal match of length at most d; guaranteed when one of length >= d/2 exists."""
    p = SearchParams(l, r, t=l, d=d, s=frozenset(s))
    mask = _check(ctx, k, p, need_t=True, need_d=True)
    if d < 2:
        raise ValueError("find_fixed_len needs d >= 2")
    return _wrap(_run_charged(
        ctx,
        lambda: _tables(ctx).cost_fixed_len(k, d, r - l + 1),
        lambda: _find_fixed_len(ctx, k, l, r, d, mask),
    ))


def find_any(ctx: ExecutionContext, k: int, l: int, r: int, s=BOTH_SIGNS):
    """Any minimal +k/-k substring in the window of a sign in s.

    Guaranteed (up to backend error) whenever a match no longer than the top
    ladder rung exists; only full-window matches of a power-of-two-plus-one
    window can fall outside the ladder.
    """
    p = SearchParams(l, r, s=frozenset(s))
    mask = _check(ctx, k, p)
    return _wrap(_run_charged(
        ctx,
        lambda: _tables(ctx).cost_any(k, r - l + 1),
        lambda: _find_any(ctx, k, l, r, mask),
    ))


def find_fixed_pos(ctx: ExecutionContext, k: int, l: int, r: int, t: int, s=BOTH_SIGNS, direction: Direction = Direction.LEFT):
    """Leftmost (LEFT) or rightmost (RIGHT) minimal match containing t."""
    p = SearchParams(l, r, t=t, s=frozenset(s), direction=direction)
    mask = _check(ctx, k, p, need_t=True)
    return _wrap(_run_charged(
        ctx,
        lambda: _tables(ctx).cost_fixed_pos(k, r - l + 1),
        lambda: _find_fixed_pos(ctx, k, l, r, t, mask, direction),
    ))


def find_first(ctx: ExecutionContext, k: int, l: int, r: int, s=BOTH_SIGNS, direction: Direction = Direction.RIGHT, *, doubling: bool = False):
    """First minimal match scanning left-to-right (RIGHT) or right-to-left (LEFT)."""
    p = SearchParams(l, r, s=frozenset(s), direction=direction)
    mask = _check(ctx, k, p)

    def run():
        lo, hi = l, r
        if doubling and r > l:
            width = 1
            while True:
                if direction is Direction.RIGHT:
                    lo, hi = l, min(l + width - 1, r)
                else:
                    lo, hi = max(l, r - width + 1), r
                if (hi - lo) == (r - l) or _find_any(ctx, k, lo, hi, mask) is not None:
                    break
                width *= 2
        return _find_first_impl(ctx, k, lo, hi, mask, direction)

    return _wrap(_run_charged(ctx, lambda: _tables(ctx).cost_first(k, r - l + 1), run))
