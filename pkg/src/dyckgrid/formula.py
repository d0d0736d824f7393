"""AND-OR formulas for directed grid connectivity, with exact size accounting.

A path from (i, j) to (i + 2^mu, j + kappa) must cross the middle column
somewhere, which yields an OR over crossing heights of ANDs of two half-size
formulas.  The 1-column base case is an OR over the kappa+1 monotone
staircase paths, each an AND of its kappa+1 edges.  Formulas are shared as a
DAG internally, but leaf_count tallies variable instances with multiplicity,
exactly as the size recurrence does.
"""

from __future__ import annotations

import math

from .grid import GridInstance, edge_count, edge_id

AND, OR, LEAF, CONST = "and", "or", "leaf", "const"


class Formula:
    __slots__ = ("kind", "children", "edge", "value", "leaf_count", "dims")

    def __init__(self, kind, children=(), edge=None, value=None):
        self.kind = kind
        self.children = tuple(children)
        self.edge = edge
        self.value = value
        self.dims = None
        if kind in (AND, OR):
            if not self.children:
                raise ValueError("AND/OR nodes need at least one child")
            self.leaf_count = sum(c.leaf_count for c in self.children)
        elif kind is LEAF:
            self.leaf_count = 1
        else:
            self.leaf_count = 0

    def __repr__(self) -> str:
        if self.kind is LEAF:
            return f"x[{self.edge}]"
        if self.kind is CONST:
            return str(self.value)
        return f"{self.kind}({len(self.children)} children, L={self.leaf_count})"


def _leaf(kind_children):
    return kind_children[0] if len(kind_children) == 1 else None


def _node(kind, children):
    if len(children) == 1:
        return children[0]
    return Formula(kind, children)


def _build(mu, kappa, i, j, leaf_fn, memo):
    key = (mu, kappa, i, j)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if mu == 0:
        paths = []
        for q in range(kappa + 1):
            edges = []
            for z in range(q):
                edges.append(leaf_fn((i, j + z), 2))
            edges.append(leaf_fn((i, j + q), 1))
            for z in range(q, kappa):
                edges.append(leaf_fn((i + 1, j + z), 2))
            paths.append(_node(AND, edges))
        out = _node(OR, paths)
    else:
        half = 1 << (mu - 1)
        terms = []
        for r in range(kappa + 1):
            left = _build(mu - 1, r, i, j, leaf_fn, memo)
            right = _build(mu - 1, kappa - r, i + half, j + r, leaf_fn, memo)
            terms.append(_node(AND, (left, right)))
        out = _node(OR, terms)
    memo[key] = out
    return out


def build_formula(mu: int, kappa: int, i: int = 0, j: int = 0, dims=None) -> Formula:
    """Formula deciding a directed path from (i, j) to (i + 2^mu, j + kappa).

    Leaves are canonical edge ids of the directed grid `dims`, which defaults
    to exactly the rectangle the formula spans.
    """
    if mu < 0 or kappa < 0:
        raise ValueError("mu and kappa must be nonnegative")
    if dims is None:
        dims = (i + (1 << mu), j + kappa)
    if dims[1] == 0:
        dims = (dims[0], 1)

    def leaf_fn(v, axis):
        return Formula(LEAF, edge=edge_id(dims, v, axis))

    root = _build(mu, kappa, i, j, leaf_fn, {})
    root.dims = tuple(dims)
    return root


def formula_size_bound(mu: int, kappa: int) -> int:
    """Strict upper bound 2^(mu+1) * C(kappa+mu+2, kappa) on the leaf count."""
    if mu < 0 or kappa < 0:
        raise ValueError("mu and kappa must be nonnegative")
    return (1 << (mu + 1)) * math.comb(kappa + mu + 2, kappa)


def evaluate(f: Formula, g: GridInstance) -> int:
    """Standard AND/OR semantics over the instance's edge-presence bits."""
    if not g.directed:
        raise ValueError("formula evaluation needs a directed instance")
    if f.dims is not None and tuple(f.dims) != g.dims:
        raise ValueError(f"formula built for dims {f.dims}, instance has {g.dims}")
    count = edge_count(g.dims)
    memo: dict[int, int] = {}

    def go(node: Formula) -> int:
        key = id(node)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if node.kind is LEAF:
            if node.edge >= count:
                raise ValueError("leaf edge id out of range for the instance")
            val = int(g.edges[node.edge])
        elif node.kind is CONST:
            val = node.value
        elif node.kind is AND:
            val = 1
            for c in node.children:
                if go(c) == 0:
                    val = 0
                    break
        else:
            val = 0
            for c in node.children:
                if go(c) == 1:
                    val = 1
                    break
        memo[key] = val
        return val

    return go(f)


def _absorb(kind, children):
    """Constant absorption under AND/OR, used only by the padding builder."""
    zero, one = (0, 1) if kind is AND else (1, 0)
    kept = []
    for c in children:
        if c.kind is CONST:
            if c.value == zero:
                return Formula(CONST, value=zero)
            continue
        kept.append(c)
    if not kept:
        return Formula(CONST, value=one)
    return _node(kind, kept)


def build_padded(n: int, k: int) -> Formula:
    """Connectivity formula for an n x k directed grid with arbitrary n.

    The grid is padded on the right out to the next power of two; pad edges
    become constants: the straight corridor from (n, k) to (2^m, k) is
    present, everything else in the pad is absent.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    mp = (n - 1).bit_length()
    full = 1 << mp

    def leaf_fn(v, axis):
        a, b = v
        if axis == 1:
            if a <= n - 1:
                return Formula(LEAF, edge=edge_id((n, k), v, 1))
            return Formula(CONST, value=1 if b == k else 0)
        if a <= n:
            return Formula(LEAF, edge=edge_id((n, k), v, 2))
        return Formula(CONST, value=0)

    memo: dict = {}

    def build(mu, kappa, i, j):
        key = (mu, kappa, i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if mu == 0:
            paths = []
            for q in range(kappa + 1):
                edges = [leaf_fn((i, j + z), 2) for z in range(q)]
                edges.append(leaf_fn((i, j + q), 1))
                edges.extend(leaf_fn((i + 1, j + z), 2) for z in range(q, kappa))
                paths.append(_absorb(AND, edges))
            out = _absorb(OR, paths)
        else:
            half = 1 << (mu - 1)
            terms = []
            for r in range(kappa + 1):
                left = build(mu - 1, r, i, j)
                right = build(mu - 1, kappa - r, i + half, j + r)
                terms.append(_absorb(AND, (left, right)))
            out = _absorb(OR, terms)
        memo[key] = out
        return out

    root = build(mp, k, 0, 0)
    root.dims = (n, k) if root.kind not in (CONST,) else root.dims
    if root.kind is CONST:
        root.dims = (n, k)
    return root


def query_estimate(f: Formula) -> int:
    """ceil(sqrt(L)): the modeled query count of evaluating a size-L formula."""
    if f.leaf_count == 0:
        return 0
    r = math.isqrt(f.leaf_count)
    return r if r * r == f.leaf_count else r + 1
