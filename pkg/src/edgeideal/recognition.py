"""Membership tests for the graph families that carry regularity formulas."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotCameronWalker
from .graph import (
    Graph,
    VertexSet,
    component_masks,
    degree,
    induced_subgraph,
    is_connected,
    members,
    popcount,
)
from .invariants import induced_matching_number, matching_number


def perfect_elimination_ordering(G: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when G is not chordal.

    Maximum cardinality search gives an ordering whose reverse is a PEO
    exactly when G is chordal; the candidate is then verified directly.
    """
    n = G.n
    weight = [0] * n
    numbered = 0
    order = []
    for _ in range(n):
        v = max((x for x in range(n) if not numbered >> x & 1), key=lambda x: (weight[x], -x))
        order.append(v)
        numbered |= 1 << v
        for u in members(G.rows[v] & ~numbered):
            weight[u] += 1
    peo = order[::-1]
    position = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in members(G.rows[v]) if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = 0
        for u in later:
            if u != parent:
                rest |= 1 << u
        if rest & ~G.rows[parent]:
            return None
    return peo


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_ordering(G) is not None


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in members(G.rows[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_forest(G: Graph) -> bool:
    return G.num_edges == G.n - len(component_masks(G))


def is_star(G: Graph) -> bool:
    """K_{1,m} with m >= 1 (K2 included)."""
    if G.n < 2 or not is_connected(G):
        return False
    return G.num_edges == G.n - 1 and any(degree(G, v) == G.n - 1 for v in range(G.n))


def is_star_triangle(G: Graph) -> bool:
    """One or more triangles sharing a single vertex (K3 included)."""
    n = G.n
    if n < 3 or n % 2 == 0 or G.num_edges != 3 * (n - 1) // 2:
        return False
    centres = [v for v in range(n) if degree(G, v) == n - 1]
    if not centres:
        return False
    c = centres[0]
    for v in range(n):
        if v == c:
            continue
        if degree(G, v) != 2:
            return False
        (other,) = members(G.rows[v] & ~(1 << c))
        if members(G.rows[other] & ~(1 << c)) != [v]:
            return False
    return True


def is_cameron_walker(G: Graph) -> bool:
    """Connected, im(G) = m(G), neither a star nor a star triangle."""
    if G.num_edges == 0 or not is_connected(G):
        return False
    if is_star(G) or is_star_triangle(G):
        return False
    return induced_matching_number(G) == matching_number(G)


@dataclass(frozen=True)
class CWDecomposition:
    """Structure of a Cameron-Walker graph.

    ``u_vertices`` carry the whiskers (``s[i]`` leaves on ``u_vertices[i]``),
    ``w_vertices`` carry the pendant triangles (``t[j]`` of them on
    ``w_vertices[j]``).  ``core_edges`` are index pairs ``(i, j)`` meaning
    ``u_vertices[i] -- w_vertices[j]``.
    """

    m: int
    p: int
    s: tuple[int, ...]
    t: tuple[int, ...]
    core_edges: tuple[tuple[int, int], ...]
    u_vertices: tuple[int, ...] = field(default=())
    w_vertices: tuple[int, ...] = field(default=())

    @property
    def vertex_count(self) -> int:
        return self.m + self.p + sum(self.s) + 2 * sum(self.t)

    @property
    def regularity(self) -> int:
        return self.m + sum(self.t)


def cw_decomposition(G: Graph) -> CWDecomposition:
    """Split G into bipartite core, whiskers and pendant triangles.

    Every degree-1 vertex is read as a whisker of its neighbour, so a core
    vertex on the triangle side that happens to be a leaf is absorbed into
    the whisker count; both readings describe the same graph.
    """
    if G.num_edges == 0 or not is_connected(G):
        raise NotCameronWalker("graph must be connected with at least one edge")
    if is_star(G):
        raise NotCameronWalker("star graphs are excluded")
    if is_star_triangle(G):
        raise NotCameronWalker("star triangles are excluded")
    rows = G.rows
    deg = [popcount(r) for r in rows]
    leaves = 0
    whiskers: dict[int, int] = {}
    for v in range(G.n):
        if deg[v] == 1:
            (a,) = members(rows[v])
            if deg[a] == 1:
                raise NotCameronWalker("isolated edge")
            leaves |= 1 << v
            whiskers[a] = whiskers.get(a, 0) + 1
    tips = 0
    triangles: dict[int, int] = {}
    for a in range(G.n):
        if deg[a] != 2 or tips >> a & 1:
            continue
        x, y = members(rows[a])
        for b, w in ((x, y), (y, x)):
            if deg[b] == 2 and rows[b] == (1 << a | 1 << w):
                tips |= 1 << a | 1 << b
                triangles[w] = triangles.get(w, 0) + 1
                break
    core = G.vertex_mask & ~leaves & ~tips
    U = [v for v in members(core) if v in whiskers]
    W = [v for v in members(core) if v not in whiskers]
    for w in triangles:
        if w in whiskers:
            raise NotCameronWalker(f"vertex {w} carries both a whisker and a pendant triangle")
        if not core >> w & 1:
            raise NotCameronWalker(f"pendant triangle anchored outside the core at {w}")
    Umask = sum(1 << u for u in U)
    Wmask = sum(1 << w for w in W)
    for u in U:
        if rows[u] & Umask:
            raise NotCameronWalker("core is not bipartite between whisker and triangle sides")
    for w in W:
        if rows[w] & Wmask:
            raise NotCameronWalker("core is not bipartite between whisker and triangle sides")
    if not U or not W:
        raise NotCameronWalker("core needs vertices on both sides")
    sub, _ = induced_subgraph(G, core)
    if not is_connected(sub):
        raise NotCameronWalker("core is disconnected")
    u_index = {u: i for i, u in enumerate(U)}
    w_index = {w: j for j, w in enumerate(W)}
    core_edges = tuple(sorted(
        (u_index[u], w_index[w]) for u in U for w in members(rows[u] & Wmask)
    ))
    dec = CWDecomposition(
        m=len(U),
        p=len(W),
        s=tuple(whiskers[u] for u in U),
        t=tuple(triangles.get(w, 0) for w in W),
        core_edges=core_edges,
        u_vertices=tuple(U),
        w_vertices=tuple(W),
    )
    if dec.vertex_count != G.n:
        raise NotCameronWalker("vertex-count identity fails")
    return dec


@dataclass(frozen=True)
class WhiskerDecomposition:
    base: VertexSet
    pendant_map: dict[int, int]

    @property
    def m(self) -> int:
        return popcount(self.base)

    def base_graph(self, G: Graph) -> Graph:
        return induced_subgraph(G, self.base)[0]


def whisker_decomposition(G: Graph) -> WhiskerDecomposition | None:
    """Find base vertices x_i each owning exactly one pendant y_i, if possible.

    Backtracks in label order; each vertex is either a pendant (degree 1,
    claiming its neighbour as base) or a base vertex waiting for a pendant.
    """
    n = G.n
    if n == 0 or n % 2:
        return None
    rows = G.rows
    deg = [popcount(r) for r in rows]
    if sum(1 for d in deg if d == 1) < n // 2:
        return None
    role = [None] * n  # 'P', 'B' (has pendant) or 'b' (awaiting)
    owner: dict[int, int] = {}

    def search(v: int) -> bool:
        if v == n:
            return all(r != "b" for r in role)
        if role[v] is not None:
            return search(v + 1)
        if deg[v] == 1:
            (u,) = members(rows[v])
            if role[u] in (None, "b"):
                prev = role[u]
                role[v], role[u] = "P", "B"
                owner[u] = v
                if search(v + 1):
                    return True
                role[v], role[u] = None, prev
                del owner[u]
        # v becomes a base vertex whose pendant must come later
        if any(deg[y] == 1 and role[y] is None for y in members(rows[v] & ~((1 << (v + 1)) - 1))):
            role[v] = "b"
            if search(v + 1):
                return True
            role[v] = None
        return False

    if not search(0):
        return None
    base = sum(1 << x for x in owner)
    return WhiskerDecomposition(base, dict(sorted(owner.items())))
