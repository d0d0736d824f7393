"""Folding one long depth-bounded word through an undirected grid.

The word path lives in diagonal bands of width depth+1 that serpentine
between the bottom and top walls.  In an up-right band the balance level is
the offset from the band's lower diagonal, an opening symbol steps north and
a closing symbol east; in a down-right band levels ride anti-diagonals, an
opening steps east and a closing south.  At each wall the band is cut at a
fixed word position and carried into the next band by nested U-turn gadgets,
one per balance level of the cut's parity, so a path arrives in the next
band on exactly the level it left with.  Within a band every vertex has at
most one present forward edge and one present backward edge, so undirected
wandering cannot invent paths: the far corner is reachable exactly when the
word is balanced with depth at most d.
"""

from __future__ import annotations

from .grid import GridInstance, edge_count, edge_id
from .reductions import CLASS_ABSENT, CLASS_PRESENT, EmbeddingMap, _Classifier
from .words import Word


class FoldSizingError(ValueError):
    """The requested grid cannot host the folded word."""


def _band_capacity_ne(k, h, c, s, d):
    return 2 * (k - h) - d + c - s


def _band_capacity_se(e, g, h):
    return e - g - 2 * h


def _layout(m: int, d: int, k: int):
    """Place bands and fold gadgets; returns (classes, slots, v_end, max_a).

    Classes are keyed by (lower_vertex, axis) since the horizontal extent is
    not yet fixed.  v_end is the level-0 slot of the final word position, or
    None when the word length's parity rules it out.
    """
    h = (d + 2) // 2
    if k < 2 * h + (d + 1) // 2 + 1:
        raise FoldSizingError(f"k={k} too small for depth {d}; need at least {2 * h + (d + 1) // 2 + 1}")

    classes: dict[tuple, tuple] = {}
    slots: list[dict] = []

    def put(v, axis, cls):
        if v[0] < 0 or v[1] < 0 or v[1] > k:
            raise FoldSizingError(f"structure escapes the grid at {v}")
        prev = classes.get((v, axis))
        if prev is not None and prev != cls:
            raise AssertionError(f"edge {(v, axis)} classified twice: {prev} then {cls}")
        classes[(v, axis)] = cls

    def ne_vertex(s, c, q, level):
        num_a = s + q + c - level
        num_b = s + q - c + level
        if num_a % 2 or num_b % 2:
            return None
        return (num_a // 2, num_b // 2)

    def se_vertex(e, g, q, level):
        num_a = e + level + g + q
        num_b = e + level - g - q
        if num_a % 2 or num_b % 2:
            return None
        return (num_a // 2, num_b // 2)

    kind = "ne"
    c, s = 0, 0
    e, g = 0, 0
    pos = 0
    while True:
        if kind == "ne":
            cap = _band_capacity_ne(k, h, c, s, d)
        else:
            cap = _band_capacity_se(e, g, h)
        if cap < 1:
            raise FoldSizingError("band capacity exhausted; increase k")
        take = min(cap, m - pos)
        for q in range(1, take + 1):
            p = pos + q
            for level in range(d + 1):
                if kind == "ne":
                    tail = ne_vertex(s, c, q - 1, level)
                    # levels above the reachable balance fall off the first
                    # band's left edge; no path can use them
                    if tail is None or tail[0] < 0:
                        continue
                    if level <= d - 1:
                        put(tail, 2, ("var", 0, p, "open"))
                        slots.append({"word": 0, "position": p, "level": level,
                                      "polarity": "open", "vertex": tail, "axis": 2})
                    if level >= 1:
                        put(tail, 1, ("var", 0, p, "close"))
                        slots.append({"word": 0, "position": p, "level": level,
                                      "polarity": "close", "vertex": tail, "axis": 1})
                else:
                    tail = se_vertex(e, g, q - 1, level)
                    if tail is None:
                        continue
                    if level <= d - 1:
                        put(tail, 1, ("var", 0, p, "open"))
                        slots.append({"word": 0, "position": p, "level": level,
                                      "polarity": "open", "vertex": tail, "axis": 1})
                    if level >= 1:
                        lower = (tail[0], tail[1] - 1)
                        put(lower, 2, ("var", 0, p, "close"))
                        slots.append({"word": 0, "position": p, "level": level,
                                      "polarity": "close", "vertex": lower, "axis": 2})
        pos += take
        if pos >= m:
            if kind == "ne":
                v_end = ne_vertex(s, c, take, 0)
            else:
                v_end = se_vertex(e, g, take, 0)
            break

        if kind == "ne":
            # fold at the top wall into a down-right band
            cut = s + take
            lanes = [lv for lv in range(d + 1) if (cut + c - lv) % 2 == 0]
            lmin, lmax = lanes[0], lanes[-1]
            e, g = cut - lmin + 1, c - lmin + 1
            for lv in lanes:
                shelf = k - (lmax - lv) // 2
                ca, cb = (cut + c - lv) // 2, (cut - c + lv) // 2
                wa, wb = (e + lv + g) // 2, (e + lv - g) // 2
                for bb in range(cb, shelf):
                    put((ca, bb), 2, CLASS_PRESENT)
                for aa in range(ca, wa):
                    put((aa, shelf), 1, CLASS_PRESENT)
                for bb in range(wb, shelf):
                    put((wa, bb), 2, CLASS_PRESENT)
            kind = "se"
        else:
            # fold at the bottom wall into an up-right band
            cut = g + take
            lanes = [lv for lv in range(d + 1) if (e + lv + cut) % 2 == 0]
            lmin, lmax = lanes[0], lanes[-1]
            s, c = e + lmax + 1, cut + lmax + 1
            for lv in lanes:
                shelf = (lv - lmin) // 2
                ca, cb = (e + lv + cut) // 2, (e + lv - cut) // 2
                wa, wb = (s + c - lv) // 2, (s - c + lv) // 2
                for bb in range(shelf, cb):
                    put((ca, bb), 2, CLASS_PRESENT)
                for aa in range(ca, wa):
                    put((aa, shelf), 1, CLASS_PRESENT)
                for bb in range(shelf, wb):
                    put((wa, bb), 2, CLASS_PRESENT)
            kind = "ne"

    max_a = 0
    for (v, axis) in classes:
        max_a = max(max_a, v[0] + (1 if axis == 1 else 0))
    if v_end is not None:
        max_a = max(max_a, v_end[0])
    return classes, slots, v_end, max_a


def fold_default_dims(m: int, d: int, k: int | None = None) -> tuple[int, int]:
    """Snug grid dims hosting an m-symbol word folded at depth d."""
    if k is None:
        k = 2 * d + 6
    _, _, _, max_a = _layout(m, d, k)
    return (max_a + 1, k)


def dyck_to_undirected_fold(word: Word, depth: int, dims: tuple[int, int]) -> EmbeddingMap:
    """Embed one word in an undirected grid; connectivity is its membership."""
    m = len(word)
    if m < 1:
        raise ValueError("word must be nonempty")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    n, k = int(dims[0]), int(dims[1])
    classes, slots, v_end, max_a = _layout(m, depth, k)
    if max_a > n:
        raise FoldSizingError(f"word needs {max_a} columns, grid has {n}")

    cls = _Classifier((n, k))
    for (v, axis), c in classes.items():
        eid = cls.put(v, axis, c)
        if c[0] == "var":
            for rec in slots:
                if rec.get("vertex") == v and rec["axis"] == axis and rec["position"] == c[2]:
                    rec["edge"] = eid
    if v_end is not None:
        va, vb = v_end
        for aa in range(va, n):
            cls.put((aa, vb), 1, CLASS_PRESENT)
        for bb in range(vb, k):
            cls.put((n, bb), 2, CLASS_PRESENT)
    cls.fill_absent()

    inst = GridInstance((n, k), directed=False)
    for eid, c in cls.classes.items():
        if c is CLASS_PRESENT:
            inst.edges[eid] = 1
        elif c[0] == "var":
            bit = word.bit(c[2] - 1)
            inst.edges[eid] = 1 if (bit == 0) == (c[3] == "open") else 0
    return EmbeddingMap(
        source={"kind": "fold", "word": "".join("()"[b] for b in word.bits),
                "depth": depth, "m": m},
        target=inst,
        classes=cls.classes,
        slots=slots,
    )
