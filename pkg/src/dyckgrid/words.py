"""Parenthesis words as bit sequences, with balance arithmetic and brute-force oracles.

Symbols are bits: 0 is an opening parenthesis, 1 is a closing one.  Everything
else in the package treats the functions here as ground truth.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class SubstringMatch(NamedTuple):
    """A located substring x[i, j] whose balance is +k or -k (sign says which)."""

    i: int
    j: int
    sign: int


SIGN_PLUS = 1
SIGN_MINUS = -1
BOTH_SIGNS = frozenset((SIGN_PLUS, SIGN_MINUS))


def parse_symbols(text: str) -> bytes:
    """Parse a word literal over {'(', ')'} or {'0', '1'} into bits."""
    out = bytearray()
    for ch in text:
        if ch in "(0":
            out.append(0)
        elif ch in ")1":
            out.append(1)
        elif ch.isspace():
            continue
        else:
            raise ValueError(f"invalid word symbol {ch!r}")
    return bytes(out)


class Word:
    """An immutable parenthesis word with O(1) indexed reads.

    Indexed reads never copy; windows are expressed as (l, r) index pairs by
    the search routines rather than as new words.
    """

    __slots__ = ("bits",)

    def __init__(self, bits: Iterable[int] | bytes | str):
        if isinstance(bits, str):
            data = parse_symbols(bits)
        else:
            data = bytes(bits)
        if any(b not in (0, 1) for b in data):
            raise ValueError("word symbols must be 0 or 1")
        self.bits = data

    def __len__(self) -> int:
        return len(self.bits)

    def bit(self, i: int) -> int:
        return self.bits[i]

    def is_virtual(self, i: int) -> bool:
        """Virtual positions are pad symbols whose reads are not charged."""
        return False

    def key(self) -> bytes:
        """Stable identity of the symbol sequence, pads included."""
        return self.bits

    def __repr__(self) -> str:
        return f"Word({''.join('()'[b] for b in self.bits)!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)


class PaddedWord:
    """A view 1^k x 0^k over a base word; the pads are virtual symbols.

    Reads inside the pads are algorithm-internal constants, so they do not
    count as oracle queries.
    """

    __slots__ = ("base", "k", "_key")

    def __init__(self, base: Word, k: int):
        if k < 0:
            raise ValueError("pad width must be nonnegative")
        self.base = base
        self.k = k
        self._key = bytes([1] * k) + base.bits + bytes(k)

    def __len__(self) -> int:
        return len(self.base) + 2 * self.k

    def bit(self, i: int) -> int:
        if i < 0 or i >= len(self):
            raise IndexError(i)
        if i < self.k:
            return 1
        if i < self.k + len(self.base):
            return self.base.bits[i - self.k]
        return 0

    def is_virtual(self, i: int) -> bool:
        return i < self.k or i >= self.k + len(self.base)

    def key(self) -> bytes:
        return self._key


def balance(w: Word | PaddedWord) -> int:
    """Count of opening symbols minus count of closing symbols."""
    bits = w.key() if isinstance(w, PaddedWord) else w.bits
    ones = sum(bits)
    return len(bits) - 2 * ones


def prefix_balances(w: Word | PaddedWord) -> list[int]:
    """Balances of x[0, i] for every i, as a list of length n."""
    out = []
    acc = 0
    bits = w.key() if isinstance(w, PaddedWord) else w.bits
    for b in bits:
        acc += 1 if b == 0 else -1
        out.append(acc)
    return out


def prefix_height(w: Word | PaddedWord) -> int:
    """Maximum balance over all prefixes; rejects the empty word."""
    if len(w) == 0:
        raise ValueError("prefix height is undefined for the empty word")
    return max(prefix_balances(w))


def prefix_min(w: Word | PaddedWord) -> int:
    """Minimum balance over all prefixes; rejects the empty word."""
    if len(w) == 0:
        raise ValueError("prefix minimum is undefined for the empty word")
    return min(prefix_balances(w))


def oracle_dyck(w: Word | PaddedWord, k: int) -> int:
    """1 iff every prefix balance lies in [0, k] and the total balance is 0.

    The empty word is accepted for every k.
    """
    acc = 0
    bits = w.key() if isinstance(w, PaddedWord) else w.bits
    for b in bits:
        acc += 1 if b == 0 else -1
        if acc < 0 or acc > k:
            return 0
    return 1 if acc == 0 else 0


def minimal_substrings_by_depth(bits: bytes) -> dict[int, list[SubstringMatch]]:
    """Every minimal substring with balance +v or -v, grouped by v, sorted by start.

    A substring is minimal when no proper substring of it has the same
    balance.  Walking right from each start, a new running extremum of the
    balance is reached exactly when the walked substring is minimal: its
    interior balances all sit strictly between 0 and the extremum, so no
    proper prefix, suffix, or inner substring can repeat the value.  The walk
    stops when the running balance returns to 0, after which no further
    minimal substring can start at this position.
    """
    n = len(bits)
    out: dict[int, list[SubstringMatch]] = {}
    for i in range(n):
        sign = 1 if bits[i] == 0 else -1
        g = 0
        extreme = 0
        for j in range(i, n):
            g += 1 if bits[j] == 0 else -1
            if g == 0 or (g < 0) != (sign < 0):
                break
            if abs(g) > extreme:
                extreme = abs(g)
                out.setdefault(extreme, []).append(SubstringMatch(i, j, sign))
    for matches in out.values():
        matches.sort(key=lambda m: (m.i, m.j))
    return out


def oracle_minimal_substrings(w: Word | PaddedWord, k: int) -> list[SubstringMatch]:
    """All minimal +k/-k substrings, in increasing start order (brute force).

    Enumerates substrings start by start, filters on balance, and discards
    non-minimal ones by the interior-balance criterion above.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    bits = w.key() if isinstance(w, PaddedWord) else w.bits
    return list(minimal_substrings_by_depth(bits).get(k, []))


def reverse_complement(w: Word) -> Word:
    """Reverse the word and swap parenthesis directions.

    Balances of mirrored substrings are preserved, while leftmost and
    rightmost selections swap roles; used as a reflection oracle in tests.
    """
    return Word(bytes(1 - b for b in reversed(w.bits)))
