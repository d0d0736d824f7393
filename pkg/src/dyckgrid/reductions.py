"""Constructive reductions between exact-count functions, words, and grids.

Four constructions, each paired with a brute-force check in the tests:

* ex_to_block: iterated exact-count promise functions encoded as parenthesis
  blocks whose total balance carries the function value;
* dyck_to_directed_grid: depth-bounded words drawn as diagonal trapezoids in
  a directed 2D grid, several words composed in parallel as an OR;
* dyck_to_undirected_fold (see fold.py): one long word folded through an
  undirected grid with level-preserving U-turn gadgets;
* fold_dim_reduce / directed_ddim_parallel: dimension folding and parallel
  composition for d-dimensional grids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .grid import GridInstance, connectivity, edge_id, reachable_set
from .words import Word, oracle_dyck


class PromiseViolationError(ValueError):
    """An input fails the exact-count promise at some composition level."""


# ---------------------------------------------------------------------------
# exact-count functions as parenthesis blocks


@dataclass(frozen=True)
class ExParams:
    """Exact-count function over 2m bits (1 iff m zeros, 0 iff m+1), iterated."""

    m: int
    levels: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.levels < 0:
            raise ValueError("levels must be >= 0")

    @property
    def arity(self) -> int:
        return (2 * self.m) ** self.levels


@dataclass(frozen=True)
class BlockSpec:
    """An even-length word whose prefix balances stay in [0, h] and whose
    total balance is 0 (value 1) or 2 (value 0)."""

    word: Word
    width: int
    height: int

    def validate(self) -> None:
        from .words import balance, prefix_balances

        if len(self.word) != self.width or self.width % 2 != 0:
            raise ValueError("block width must equal the word length and be even")
        if len(self.word):
            heights = prefix_balances(self.word)
            if min(heights) < 0 or max(heights) > self.height:
                raise ValueError("block prefix balances must stay within [0, h]")
        if balance(self.word) not in (0, 2):
            raise ValueError("block balance must be 0 or 2")


def ex_value(m: int, bits) -> int:
    """The exact-count promise function: 1 iff m zeros, 0 iff m+1 zeros."""
    zeros = sum(1 for b in bits if b == 0)
    if zeros == m:
        return 1
    if zeros == m + 1:
        return 0
    raise PromiseViolationError(f"{zeros} zeros among {len(bits)} bits breaks the (m, m+1) promise")


def ex_iterated(p: ExParams, bits) -> int:
    """Evaluate the level-wise iteration of the exact-count function."""
    bits = list(bits)
    if len(bits) != p.arity:
        raise ValueError(f"input must have {p.arity} bits")
    if p.levels == 0:
        (b,) = bits
        return b
    for _ in range(p.levels):
        bits = [ex_value(p.m, bits[i : i + 2 * p.m]) for i in range(0, len(bits), 2 * p.m)]
    (out,) = bits
    return out


def ex_to_block(p: ExParams, bits) -> BlockSpec:
    """Encode an input of the iterated exact-count function as a block.

    Level 0 maps bit 0 to the block 00 and bit 1 to 01.  Each level
    concatenates the 2m sub-blocks and appends 2m closers, growing the width
    to 2m(w+1) and the height bound by 2(m+1).  The promise is checked
    eagerly at every level.
    """
    bits = [int(b) for b in bits]
    if any(b not in (0, 1) for b in bits):
        raise ValueError("input bits must be 0 or 1")
    if len(bits) != p.arity:
        raise ValueError(f"input must have {p.arity} bits")

    def level0(b: int) -> bytes:
        return b"\x00\x00" if b == 0 else b"\x00\x01"

    blocks = [level0(b) for b in bits]
    values = list(bits)
    width, height = 2, 2
    for _ in range(p.levels):
        next_blocks = []
        next_values = []
        group = 2 * p.m
        for s in range(0, len(blocks), group):
            chunk_vals = values[s : s + group]
            val = ex_value(p.m, chunk_vals)
            word = b"".join(blocks[s : s + group]) + b"\x01" * group
            next_blocks.append(word)
            next_values.append(val)
        blocks, values = next_blocks, next_values
        width = 2 * p.m * (width + 1)
        height = height + 2 * (p.m + 1)
    (word,) = blocks
    spec = BlockSpec(Word(word), width, height)
    spec.validate()
    return spec


def block_to_dyck_answer(b: BlockSpec) -> int:
    """Membership of the block at its own height bound: 1 iff balance 0."""
    b.validate()
    return oracle_dyck(b.word, b.height)


def promise_inputs(p: ExParams):
    """Every input satisfying the promise at all levels (exhaustive; small p only)."""
    if p.levels == 0:
        yield (0,)
        yield (1,)
        return
    inner = ExParams(p.m, p.levels - 1)
    pool = list(promise_inputs(inner))
    by_value = {0: [x for x in pool if ex_iterated(inner, x) == 0],
                1: [x for x in pool if ex_iterated(inner, x) == 1]}
    group = 2 * p.m
    for pattern in product((0, 1), repeat=group):
        zeros = sum(1 for b in pattern if b == 0)
        if zeros not in (p.m, p.m + 1):
            continue
        for choice in product(*[by_value[b] for b in pattern]):
            yield tuple(x for chunk in choice for x in chunk)


# ---------------------------------------------------------------------------
# trapezoid embedding into the directed 2D grid


CLASS_PRESENT = ("present",)
CLASS_ABSENT = ("absent",)


@dataclass
class EmbeddingMap:
    """A constructed grid instance plus the audit trail of the construction.

    `classes` assigns every canonical edge id exactly one of: forced-present,
    forced-absent, or a variable slot ("var", word_index, position, polarity)
    with polarity "open" or "close".  `slots` lists the variable slots with
    their diagonal levels for inspection.
    """

    source: dict
    target: GridInstance
    classes: dict[int, tuple]
    slots: list = field(default_factory=list)

    def audit_complete(self) -> bool:
        from .grid import edge_count

        return set(self.classes) == set(range(edge_count(self.target.dims)))


class _Classifier:
    def __init__(self, dims):
        self.dims = dims
        self.classes: dict[int, tuple] = {}

    def put(self, lower, axis, cls):
        eid = edge_id(self.dims, lower, axis)
        prev = self.classes.get(eid)
        if prev is not None and prev != cls:
            raise AssertionError(f"edge {eid} classified twice: {prev} then {cls}")
        self.classes[eid] = cls
        return eid

    def fill_absent(self):
        from .grid import edge_count

        for eid in range(edge_count(self.dims)):
            self.classes.setdefault(eid, CLASS_ABSENT)


def dyck_to_directed_grid(words: list[Word], depth: int) -> EmbeddingMap:
    """Embed t equal-length words as parallel trapezoids; connectivity is
    the OR of their depth-bounded memberships.

    A word of length m occupies a diagonal strip of width depth+1.  Opening
    symbols at position p map to the strip's up-slope slot edges on levels
    0..depth-1, closing symbols to down-slope slots on levels 1..depth; each
    realized slot edge is present exactly when the word symbol matches its
    polarity.  Strips are insulated by the unmapped edges around them; a
    forced bottom corridor feeds every strip entry and a forced top corridor
    collects every strip exit.
    """
    if not words:
        raise ValueError("need at least one word")
    m = len(words[0])
    if m < 2 or m % 2 != 0:
        raise ValueError("word length must be even and >= 2")
    if any(len(w) != m for w in words):
        raise ValueError("all words must share one length")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    t = len(words)
    d = depth
    half = m // 2
    n = (d + 1) * (t - 1) + half + 1
    k = half + 1
    dims = (n, k)
    cls = _Classifier(dims)
    slots = []

    for j in range(t):
        xj = j * (d + 1)
        # up-slope slots: vertical edges; down-slope slots: horizontal edges
        for a in range(xj, xj + half + 1):
            for b in range(0, half + 1):
                level = b - a + xj
                pos = a + b - xj + 1
                if 1 <= pos <= m:
                    if 0 <= level <= d - 1 and b <= half - 1:
                        eid = cls.put((a, b), 2, ("var", j, pos, "open"))
                        slots.append({"word": j, "position": pos, "level": level,
                                      "polarity": "open", "edge": eid})
                    if 1 <= level <= d and b <= half and a + 1 <= n:
                        eid = cls.put((a, b), 1, ("var", j, pos, "close"))
                        slots.append({"word": j, "position": pos, "level": level,
                                      "polarity": "close", "edge": eid})
        # exit: one forced step up from the strip's end corner, then the top
        # corridor picks the path up
        cls.put((xj + half, half), 2, CLASS_PRESENT)

    for a in range(0, (t - 1) * (d + 1)):
        cls.put((a, 0), 1, CLASS_PRESENT)
    for a in range(half, n):
        cls.put((a, k), 1, CLASS_PRESENT)
    cls.fill_absent()

    inst = GridInstance(dims, directed=True)
    for eid, c in cls.classes.items():
        if c is CLASS_PRESENT:
            inst.edges[eid] = 1
        elif c[0] == "var":
            _, j, pos, polarity = c
            bit = words[j].bit(pos - 1)
            inst.edges[eid] = 1 if (bit == 0) == (polarity == "open") else 0
    emb = EmbeddingMap(
        source={"kind": "trapezoid", "words": ["".join("()"[b] for b in w.bits) for w in words],
                "depth": d, "t": t, "m": m},
        target=inst,
        classes=cls.classes,
        slots=slots,
    )
    return emb


# ---------------------------------------------------------------------------
# dimension folding and d-dimensional parallel composition


@dataclass
class DimFold:
    """Vertex bijection folding the last two axes of a grid into one.

    Even layers keep their orientation and odd layers reverse, so axis-d
    neighbors stay neighbors after folding.  When the last axis has an even
    vertex count, the top layer is left out of the fold and a single extra
    edge reattaches the far corner.
    """

    source_dims: tuple[int, ...]
    target_dims: tuple[int, ...]
    folded_layers: int
    extra_edge: tuple | None

    def forward(self, v: tuple[int, ...]) -> tuple[int, ...]:
        *head, xd1, xd = v
        if xd >= self.folded_layers:
            raise ValueError("vertex lies outside the folded layers")
        stride = self.source_dims[-2] + 1
        if xd % 2 == 0:
            y = xd * stride + xd1
        else:
            y = xd * stride + stride - 1 - xd1
        return tuple(head) + (y,)

    def backward(self, v: tuple[int, ...]) -> tuple[int, ...]:
        *head, y = v
        stride = self.source_dims[-2] + 1
        xd, rem = divmod(y, stride)
        xd1 = rem if xd % 2 == 0 else stride - 1 - rem
        return tuple(head) + (xd1, xd)

    def pull_back(self, g: GridInstance) -> GridInstance:
        """Rebuild a folded undirected instance inside the source grid."""
        if g.dims != self.target_dims or g.directed:
            raise ValueError("instance does not match the fold target")
        out = GridInstance(self.source_dims, directed=False)
        td = len(self.target_dims)
        for eid, present in enumerate(g.edges):
            if not present:
                continue
            lower, axis = g.decode_edge(eid)
            upper = lower[: axis - 1] + (lower[axis - 1] + 1,) + lower[axis:]
            a = self.backward(lower)
            b = self.backward(upper)
            diff = [i for i in range(len(a)) if a[i] != b[i]]
            (i,) = diff
            lo = a if a[i] < b[i] else b
            out.set_edge(lo, i + 1, True)
        if self.extra_edge is not None:
            lower, axis = self.extra_edge
            out.set_edge(lower, axis, True)
        return out


def fold_dim_reduce(dims: tuple[int, ...]) -> DimFold:
    """Fold a d-dimensional grid's last axis into axis d-1.

    The folded grid has dims (n_1, ..., n_{d-2}, (n_{d-1}+1)(n_d+1) - 1) when
    the last axis has an odd vertex count; with an even count the topmost
    layer stays unfolded and one extra edge reattaches the corner.
    """
    dims = tuple(int(x) for x in dims)
    if len(dims) < 2:
        raise ValueError("need at least two axes to fold")
    nd = dims[-1]
    stride = dims[-2] + 1
    if (nd + 1) % 2 == 1:
        layers = nd + 1
        target = dims[:-2] + (stride * layers - 1,)
        extra = None
    else:
        layers = nd
        target = dims[:-2] + (stride * layers - 1,)
        extra = (dims[:-1] + (nd - 1,), len(dims))
    return DimFold(dims, target, layers, extra)


def directed_ddim_parallel(prefix_dims: tuple[int, ...], instances: dict, plane_dims: tuple[int, int]) -> GridInstance:
    """Compose 2D directed instances in parallel inside a (d)-dimensional grid.

    The bottom (d-2)-dimensional subgrid at plane coordinates (0, 0) and the
    top one at (n_{d-1}, n_d) are fully present; slice I carries instance
    G_I; every other edge is absent.  Connectivity is the OR over slices.
    """
    prefix_dims = tuple(int(x) for x in prefix_dims)
    plane_dims = (int(plane_dims[0]), int(plane_dims[1]))
    if not prefix_dims:
        raise ValueError("need at least one leading axis")
    expected = list(product(*(range(n + 1) for n in prefix_dims)))
    if set(instances) != set(expected):
        raise ValueError("instances must cover exactly the leading subgrid")
    for g in instances.values():
        if g.dims != plane_dims or not g.directed:
            raise ValueError("instances must be directed and share plane dims")
    dims = prefix_dims + plane_dims
    d = len(dims)
    out = GridInstance(dims, directed=True)
    for corner in ((0, 0), plane_dims):
        for idx in expected:
            v = idx + corner
            for a in range(len(prefix_dims)):
                if v[a] < prefix_dims[a]:
                    out.set_edge(v, a + 1, True)
    for idx, g in instances.items():
        for eid, present in enumerate(g.edges):
            if not present:
                continue
            lower, axis = g.decode_edge(eid)
            out.set_edge(idx + lower, len(prefix_dims) + axis, True)
    return out


def parallel_or_answer(instances: dict) -> int:
    return 1 if any(connectivity(g) for g in instances.values()) else 0


def slice_reachability_partition(composite: GridInstance, prefix_dims, plane_dims) -> dict:
    """Interior reachable vertices grouped by slice, for cross-path checks."""
    reach = reachable_set(composite)
    groups: dict[tuple, set] = {}
    for v in reach:
        idx, plane = v[: len(prefix_dims)], v[len(prefix_dims) :]
        if plane == (0, 0) or plane == tuple(plane_dims):
            continue
        groups.setdefault(idx, set()).add(plane)
    return groups
