"""Simple graphs on vertices ``0..n-1`` stored as per-vertex adjacency bitsets.

Vertex sets are plain ``int`` bitmasks throughout the package (bit ``i`` set
means vertex ``i`` is a member).  Functions that take a vertex set also accept
any iterable of vertex labels.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import FormatError, InvalidVertex, LoopRejected

MAX_VERTICES = 62

VertexSet = int
VertexSetLike = Union[int, Iterable[int]]


def vset(vertices: VertexSetLike) -> VertexSet:
    """Bitmask for ``vertices``; an ``int`` is returned unchanged."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for x in vertices:
        mask |= 1 << x
    return mask


def members(mask: VertexSet) -> list[int]:
    """Sorted vertex labels contained in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise InvalidVertex(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidVertex(f"row {i} references a vertex >= {self.n}")
            if row >> i & 1:
                raise LoopRejected(f"loop at vertex {i}")
            for j in members(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.rows[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse silently."""
    if not 0 <= n <= MAX_VERTICES:
        raise InvalidVertex(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for e in edges:
        u, v = e
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"endpoint {x} not in 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def degree(G: Graph, x: int) -> int:
    return popcount(G.rows[x])


def neighbor_set(G: Graph, A: VertexSetLike) -> VertexSet:
    """N_G(A): vertices adjacent to some member of A (may meet A)."""
    out = 0
    for a in members(vset(A)):
        out |= G.rows[a]
    return out


def closed_neighborhood(G: Graph, A: VertexSetLike) -> VertexSet:
    A = vset(A)
    return neighbor_set(G, A) | A


def induced_subgraph(G: Graph, S: VertexSetLike) -> tuple[Graph, list[int]]:
    """G[S] relabelled to ``0..|S|-1`` in increasing label order.

    Returns the subgraph and ``labels`` with ``labels[new] == old``.
    """
    labels = members(vset(S))
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        row = 0
        for nb in members(G.rows[old]):
            if nb in index:
                row |= 1 << index[nb]
        rows.append(row)
    return Graph(len(labels), tuple(rows)), labels


def delete_vertices(G: Graph, A: VertexSetLike) -> tuple[Graph, list[int]]:
    """G - A, with the relabelling map as in :func:`induced_subgraph`."""
    return induced_subgraph(G, G.vertex_mask & ~vset(A))


def delete_closed_neighborhood(G: Graph, x: int) -> tuple[Graph, list[int]]:
    """G - N_G[x]."""
    return delete_vertices(G, G.rows[x] | 1 << x)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    rows = list(G.rows) + [r << G.n for r in H.rows]
    return Graph(G.n + H.n, tuple(rows))


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph whose vertex ``perm[i]`` plays the role of old vertex ``i``."""
    return from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def component_masks(G: Graph, within: VertexSetLike | None = None) -> list[VertexSet]:
    """Connected components of G[within] as bitmasks, ordered by least label."""
    remaining = G.vertex_mask if within is None else vset(within)
    comps = []
    while remaining:
        frontier = seen = remaining & -remaining
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= G.rows[v]
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        remaining &= ~seen
    return comps


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(component_masks(G)) == 1


def is_independent(G: Graph, A: VertexSetLike) -> bool:
    A = vset(A)
    return all(G.rows[a] & A == 0 for a in members(A))


def is_vertex_cover(G: Graph, C: VertexSetLike) -> bool:
    """True iff every edge meets C, i.e. the complement of C is independent."""
    return is_independent(G, G.vertex_mask & ~vset(C))


# -- graph6 -----------------------------------------------------------------

def emit_graph6(G: Graph) -> str:
    """Short-form graph6 encoding (n <= 62), without trailing newline."""
    n = G.n
    bits = []
    for j in range(1, n):
        row = G.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 line (an optional ``>>graph6<<`` header is skipped)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    start = 0
    if text.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if len(text) <= start:
        raise FormatError("empty graph6 string", offset=start)
    values = []
    for off in range(start, len(text)):
        c = ord(text[off])
        if not 63 <= c <= 126:
            raise FormatError(f"byte {text[off]!r} outside graph6 range 63..126", offset=off)
        values.append(c - 63)
    n = values[0]
    if n == 63:
        raise FormatError("long-form graph6 (n > 62) is not supported", offset=start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = values[1:]
    if len(body) < need:
        raise FormatError(f"truncated bit stream: need {need} data bytes, got {len(body)}",
                          offset=start + 1 + len(body))
    if len(body) > need:
        raise FormatError(f"{len(body) - need} trailing bytes after bit stream",
                          offset=start + 1 + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- edge lists -------------------------------------------------------------

def emit_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0])
    except ValueError:
        raise FormatError("header must be 'n m'", line=1) from None
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for k, parts in enumerate(lines[1:], start=2):
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise FormatError("edge line must be 'u v'", line=k) from None
        edges.append((u, v))
    return from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either a graph6 line or an edge-list document."""
    stripped = text.strip()
    if "\n" in stripped or " " in stripped:
        return parse_edge_list(text)
    return parse_graph6(stripped)
