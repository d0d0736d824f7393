"""Brute-force comparators and exhaustive sweep workers.

Everything here answers queries straight from the enumerated minimal-match
lists, independent of the recursive search implementations, and exists so
the test suite can sweep the full parameter space quickly: one memoized
context per word, brute lists computed once, and word batches spread over
processes.
"""

from __future__ import annotations

import random
from itertools import product

from .dyck import decide_dyck
from .oracle import Backend, ExecutionContext
from .substring import (
    Direction,
    _find_any,
    _find_first,
    _find_fixed_len,
    _find_fixed_pos,
    _find_from,
)
from .costmodel import ladder_rungs
from .words import Word, minimal_substrings_by_depth, oracle_dyck

SIGN_SETS = (frozenset((1,)), frozenset((-1,)), frozenset((1, -1)))
_MASKS = ((1, frozenset((1,))), (2, frozenset((-1,))), (3, frozenset((1, -1))))


def brute_anchored(matches, l, r, t, d, s, rightmost=False):
    """Leftmost/rightmost minimal match through t, windowed and length-capped."""
    best = None
    for m in matches:
        if m.i > t:
            break
        if m.j < t or m.i < l or m.j > r or m.j - m.i + 1 > d or m.sign not in s:
            continue
        if not rightmost:
            return m
        best = m
    return best


def brute_windowed(matches, l, r, s):
    return [m for m in matches if l <= m.i and m.j <= r and m.sign in s]


def sweep_word_substring(bits, kmax=5, full=True):
    """Compare the whole search family with brute force on one word.

    Returns a list of mismatch descriptions (empty when everything agrees).
    Internal entry points are used directly; the public wrappers add only
    validation and cost charging and have their own tests.  With full=False,
    anchored searches skip odd d values to shorten smoke runs.
    """
    word = Word(bytes(bits))
    n = len(word)
    by_depth = minimal_substrings_by_depth(word.bits)
    ctx = ExecutionContext(word)
    ctx.memo = {}
    bad = []
    LEFT, RIGHT = Direction.LEFT, Direction.RIGHT

    def report(op, k, params, got, want):
        bad.append((op, bytes(bits), k, params, got, want))

    def eq(res, match):
        if res is None or match is None:
            return res is None and match is None
        return res[0] == match.i and res[1] == match.j and res[2] == match.sign

    for k in range(2, kmax + 1):
        matches = by_depth.get(k, [])
        for l in range(n):
            for r in range(l, n):
                wlen = r - l + 1
                rungs = ladder_rungs(k, r - l, cover=False)
                top = max((min(dd, wlen) for dd in rungs), default=0)
                for mask, s in _MASKS:
                    in_window = brute_windowed(matches, l, r, s)
                    want_first = in_window[0] if in_window else None
                    got = _find_first(ctx, k, l, r, mask, RIGHT)
                    if not eq(got, want_first):
                        report("first_right", k, (l, r, s), got, want_first)
                    want_last = in_window[-1] if in_window else None
                    got = _find_first(ctx, k, l, r, mask, LEFT)
                    if not eq(got, want_last):
                        report("first_left", k, (l, r, s), got, want_last)
                    got = _find_any(ctx, k, l, r, mask)
                    want_any = any(m.j - m.i + 1 <= top for m in in_window)
                    if (got is not None) != want_any or (
                        got is not None and not any(eq(got, m) for m in in_window)
                    ):
                        report("any", k, (l, r, s), got, in_window)
                    for t in range(l, r + 1):
                        got = _find_fixed_pos(ctx, k, l, r, t, mask, LEFT)
                        want = brute_anchored(matches, l, r, t, wlen, s)
                        if not eq(got, want):
                            report("fixedpos_left", k, (l, r, t, s), got, want)
                        got = _find_fixed_pos(ctx, k, l, r, t, mask, RIGHT)
                        want = brute_anchored(matches, l, r, t, wlen, s, rightmost=True)
                        if not eq(got, want):
                            report("fixedpos_right", k, (l, r, t, s), got, want)
                        ds = range(1, wlen + 1) if full else range(2, wlen + 1, 2)
                        for d in ds:
                            got = _find_from(ctx, k, l, r, t, d, mask)
                            want = brute_anchored(matches, l, r, t, d, s)
                            if not eq(got, want):
                                report("from", k, (l, r, t, d, s), got, want)
                            got = _find_from(ctx, k, l, r, t, d, mask, rightmost=True)
                            want = brute_anchored(matches, l, r, t, d, s, rightmost=True)
                            if not eq(got, want):
                                report("from_right", k, (l, r, t, d, s), got, want)
                    for d in range(2, wlen + 1):
                        got = _find_fixed_len(ctx, k, l, r, d, mask)
                        valid = got is None or any(
                            eq(got, m) and m.j - m.i + 1 <= d for m in in_window
                        )
                        guaranteed = any(
                            (d + 1) // 2 <= m.j - m.i + 1 <= d for m in in_window
                        )
                        if not valid or (guaranteed and got is None):
                            report("fixedlen", k, (l, r, d, s), got, in_window)
    return bad


def sweep_batch_substring(batch, kmax=5):
    bad = []
    for bits in batch:
        bad.extend(sweep_word_substring(bits, kmax))
        if len(bad) > 8:
            break
    return bad


def sweep_word_dyck(bits, ks=(1, 2, 3, 4, 5)):
    """decide_dyck vs the prefix-scan oracle on one word, all depths."""
    word = Word(bytes(bits))
    bad = []
    for k in ks:
        ctx = ExecutionContext(word)
        ctx.memo = {}
        got = decide_dyck(ctx, word, k)
        want = oracle_dyck(word, k)
        if got != want:
            bad.append((bytes(bits), k, got, want))
    return bad


def sweep_batch_dyck(batch, ks=(1, 2, 3, 4, 5)):
    bad = []
    for bits in batch:
        bad.extend(sweep_word_dyck(bits, ks))
        if len(bad) > 8:
            break
    return bad


def all_words(n: int):
    return product((0, 1), repeat=n)


def member_word(m: int, depth: int, rng: random.Random) -> Word | None:
    """A uniform-ish random balanced word of depth at most `depth`."""
    bits = []
    h = 0
    for p in range(m):
        rem = m - p
        can_open = h + 1 <= depth and rem - 1 >= h + 1
        can_close = h >= 1 and rem - 1 >= 0
        if can_open and can_close:
            b = rng.randint(0, 1)
        elif can_open:
            b = 0
        elif can_close:
            b = 1
        else:
            return None
        bits.append(b)
        h += 1 if b == 0 else -1
    return Word(bytes(bits)) if h == 0 else None


def nonmember_word(m: int, depth: int, rng: random.Random) -> Word:
    while True:
        w = Word(bytes(rng.randint(0, 1) for _ in range(m)))
        if not oracle_dyck(w, depth):
            return w
