"""Top-level decision: is the word balanced with nesting depth at most k?

The word is framed between k virtual closers on the left and k virtual
openers on the right; the framed word contains a minimal (k+1)-substring
exactly when the original word violates one of the three membership
conditions (depth above k, a negative prefix, or nonzero total balance).
"""

from __future__ import annotations

from .oracle import ExecutionContext
from .substring import find_any
from .words import PaddedWord, Word


def padded_word(w: Word, k: int) -> PaddedWord:
    """The framed view 1^k x 0^k; pad reads are free of ledger charges."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return PaddedWord(w, k)


def decide_dyck(ctx: ExecutionContext, w: Word, k: int) -> int:
    """1 iff w is a balanced word of depth at most k.

    Depths of n/2 or more are equivalent to unbounded depth, so k is clamped
    to ceil(n/2) before framing.
    """
    if k < 1:
        raise ValueError("decide_dyck needs k >= 1")
    n = len(w)
    if n == 0:
        return 1
    keff = (n + 1) // 2 if 2 * k >= n else k
    framed = padded_word(w, keff)
    saved_word, saved_memo = ctx.word, ctx.memo
    ctx.word = framed
    # the answer memo is keyed per word, so give the framed view its own
    if ctx.memo is not None:
        ctx.memo = {}
    try:
        v = find_any(ctx, keff + 1, 0, n + 2 * keff - 1, frozenset((1, -1)))
    finally:
        ctx.word = saved_word
        ctx.memo = saved_memo
    return 1 if v is None else 0
