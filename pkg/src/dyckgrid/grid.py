"""d-dimensional grid subgraphs with a canonical edge order and BFS connectivity.

Vertices carry coordinates 0..n_i along axis i.  Edges join coordinate
neighbors; in directed grids they point toward increasing coordinates.  The
canonical edge id orders all axis-1 edges first, then axis-2, and so on,
lexicographically by the edge's lower endpoint within each axis.  The `GRID
v1` text format serializes the presence bitmap in that order, 64 characters
per line, so instances diff cleanly and round-trip bit-exactly.
"""

from __future__ import annotations

from collections import deque
from itertools import product


class GridInstance:
    """A subgraph of the full grid, as dims, directedness, and an edge bitmap."""

    def __init__(self, dims: tuple[int, ...], directed: bool, edges=None):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError("dims must be positive integers")
        self.dims = dims
        self.directed = bool(directed)
        count = edge_count(dims)
        if edges is None:
            self.edges = bytearray(count)
        else:
            edges = bytearray(edges)
            if len(edges) != count:
                raise ValueError(f"edge bitmap must have {count} entries")
            if any(b not in (0, 1) for b in edges):
                raise ValueError("edge bitmap entries must be 0 or 1")
            self.edges = edges

    # -- canonical edge ids -------------------------------------------------

    def edge_id(self, lower_vertex: tuple[int, ...], axis: int) -> int:
        return edge_id(self.dims, lower_vertex, axis)

    def decode_edge(self, eid: int) -> tuple[tuple[int, ...], int]:
        return decode_edge(self.dims, eid)

    def set_edge(self, lower_vertex, axis, present: bool = True) -> None:
        self.edges[self.edge_id(lower_vertex, axis)] = 1 if present else 0

    def has_edge(self, lower_vertex, axis) -> bool:
        return bool(self.edges[self.edge_id(lower_vertex, axis)])

    def vertices(self):
        return product(*(range(d + 1) for d in self.dims))

    def copy(self) -> "GridInstance":
        return GridInstance(self.dims, self.directed, bytearray(self.edges))


def edge_count(dims: tuple[int, ...]) -> int:
    total = 0
    for axis, n in enumerate(dims):
        block = n
        for b, m in enumerate(dims):
            if b != axis:
                block *= m + 1
        total += block
    return total


def _axis_offsets(dims: tuple[int, ...]) -> list[int]:
    offsets = []
    acc = 0
    for axis, n in enumerate(dims):
        offsets.append(acc)
        block = n
        for b, m in enumerate(dims):
            if b != axis:
                block *= m + 1
        acc += block
    return offsets


def edge_id(dims: tuple[int, ...], lower_vertex: tuple[int, ...], axis: int) -> int:
    """Canonical id of the edge from lower_vertex one step along axis (1-based)."""
    d = len(dims)
    if not (1 <= axis <= d):
        raise ValueError(f"axis must be in 1..{d}")
    if len(lower_vertex) != d:
        raise ValueError("vertex arity does not match dims")
    a = axis - 1
    for b, (x, n) in enumerate(zip(lower_vertex, dims)):
        limit = n - 1 if b == a else n
        if not (0 <= x <= limit):
            raise ValueError(f"edge endpoint out of bounds: {lower_vertex} axis {axis}")
    rank = 0
    for b, x in enumerate(lower_vertex):
        size = dims[b] if b == a else dims[b] + 1
        rank = rank * size + x
    return _axis_offsets(dims)[a] + rank


def decode_edge(dims: tuple[int, ...], eid: int) -> tuple[tuple[int, ...], int]:
    """Inverse of edge_id."""
    if eid < 0 or eid >= edge_count(dims):
        raise ValueError("edge id out of range")
    offsets = _axis_offsets(dims)
    axis = max(a for a, off in enumerate(offsets) if off <= eid)
    rank = eid - offsets[axis]
    sizes = [dims[b] if b == axis else dims[b] + 1 for b in range(len(dims))]
    coords = [0] * len(dims)
    for b in range(len(dims) - 1, -1, -1):
        coords[b] = rank % sizes[b]
        rank //= sizes[b]
    return tuple(coords), axis + 1


def _vertex_rank(dims, v) -> int:
    rank = 0
    for x, n in zip(v, dims):
        rank = rank * (n + 1) + x
    return rank


def reachable_set(g: GridInstance, start: tuple[int, ...] | None = None) -> set:
    """Vertices reachable from `start` (default: the origin) over present edges.

    Frontiers are expanded in ascending vertex id, so traversal order is
    deterministic.
    """
    dims = g.dims
    d = len(dims)
    if start is None:
        start = tuple([0] * d)
    seen = {start}
    frontier = [start]
    while frontier:
        frontier.sort(key=lambda v: _vertex_rank(dims, v))
        nxt = []
        for v in frontier:
            for a in range(d):
                if v[a] < dims[a]:
                    u = v[:a] + (v[a] + 1,) + v[a + 1 :]
                    if u not in seen and g.edges[edge_id(dims, v, a + 1)]:
                        seen.add(u)
                        nxt.append(u)
                if not g.directed and v[a] > 0:
                    u = v[:a] + (v[a] - 1,) + v[a + 1 :]
                    if u not in seen and g.edges[edge_id(dims, u, a + 1)]:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return seen


def connectivity(g: GridInstance, *, count_visited: bool = False):
    """1 iff a path of present edges joins the origin corner to the dims corner."""
    seen = reachable_set(g)
    result = 1 if g.dims in seen else 0
    if count_visited:
        return result, len(seen)
    return result


# -- GRID v1 file format ----------------------------------------------------


def dump_grid(g: GridInstance) -> str:
    header = "GRID v1 directed={} dims={}".format(
        1 if g.directed else 0, ",".join(str(d) for d in g.dims)
    )
    bits = "".join("1" if b else "0" for b in g.edges)
    lines = [header]
    for i in range(0, len(bits), 64):
        lines.append(bits[i : i + 64])
    return "\n".join(lines) + "\n"


def load_grid(text: str) -> GridInstance:
    lines = text.split("\n")
    if not lines or not lines[0].startswith("GRID v1 "):
        raise ValueError("not a GRID v1 file")
    if lines[-1] != "":
        raise ValueError("GRID v1 files require a trailing newline")
    fields = lines[0].split()
    if len(fields) != 4:
        raise ValueError("malformed GRID v1 header")
    try:
        directed = {"directed=0": False, "directed=1": True}[fields[2]]
    except KeyError:
        raise ValueError("malformed directed flag") from None
    if not fields[3].startswith("dims="):
        raise ValueError("malformed dims field")
    dims = tuple(int(x) for x in fields[3][len("dims=") :].split(","))
    bits = "".join(lines[1:-1])
    if any(len(line) > 64 for line in lines[1:-1]):
        raise ValueError("GRID v1 bitmap lines must wrap at 64 characters")
    if set(bits) - {"0", "1"}:
        raise ValueError("GRID v1 bitmap must be 0/1")
    if len(bits) != edge_count(dims):
        raise ValueError("GRID v1 bitmap length does not match dims")
    return GridInstance(dims, directed, (1 if c == "1" else 0 for c in bits))
