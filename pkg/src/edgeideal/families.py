"""Constructors for graphs with prescribed (regularity, v-number).

Vertex labels are assigned block by block in the order documented on each
builder, so outputs are stable and can be used as golden values.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CoreDisconnected, CoreNotBipartite, DegenerateStar, InvalidParams
from .graph import Graph, from_edges, is_connected
from .recognition import is_star, is_star_triangle


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class FamilyParams:
    """Resolved construction parameters.

    ``slack`` is how far v sits below its largest admissible value, ``t`` the
    number of pendant paths (or pendant y's) hung on each clique vertex, and
    ``k`` the number of non-zero entries of ``t``.
    """

    n: int
    r: int
    v: int
    slack: int = 0
    t: tuple[int, ...] = ()

    @property
    def k(self) -> int:
        return sum(1 for x in self.t if x)


def _greedy_parts(total: int, first: int, slots: int) -> list[int]:
    """``[first, ...]`` with the remainder filled largest-first, each part capped
    at ``first``; the list has exactly ``slots`` entries (trailing zeros)."""
    parts = [first]
    rest = total - first
    while len(parts) < slots:
        take = min(first, rest)
        parts.append(take)
        rest -= take
    if rest:
        raise InvalidParams(f"cannot distribute {total} into {slots} parts capped at {first}")
    return parts


def _slack_params(n: int, r: int, v: int, denominator: int, label: str) -> FamilyParams:
    c = ceil_div(r, denominator)
    vmax = r - c + 1
    if not 1 <= v <= vmax:
        raise InvalidParams(f"need 1 <= v <= r - ceil(r/{label}) + 1 = {vmax}, got v={v}")
    slack = vmax - v
    t = _greedy_parts(r, c + slack, denominator)
    return FamilyParams(n, r, v, slack, tuple(t))


def case1_params(n: int, r: int, v: int) -> FamilyParams:
    if n < 3:
        raise InvalidParams(f"need n >= 3, got n={n}")
    if not (1 <= r and 2 * r < n):
        raise InvalidParams(f"need 1 <= r < n/2, got r={r}, n={n}")
    if n - 2 * r < r:
        raise InvalidParams(f"need n - 2r >= r for the tree construction, got n-2r={n - 2 * r}, r={r}")
    if not 1 <= v <= r:
        raise InvalidParams(f"need 1 <= v <= r, got v={v}, r={r}")
    return FamilyParams(n, r, v)


def build_case1_tree(n: int, r: int, v: int) -> Graph:
    """Tree on n vertices with regularity r and v-number v (needs n - 2r >= r).

    Labels: y_1..y_r = 0..r-1, z_1..z_r = r..2r-1, x_1..x_v = 2r..2r+v-1,
    then w_1..w_{n-2r-v}.  Every y_i carries the pendant z_i; x_1 is joined to
    x_2..x_v, to y_1..y_{r-v+1} and to every w; x_i is joined to y_{r-v+i}.
    """
    case1_params(n, r, v)
    y = lambda i: i - 1  # noqa: E731
    z = lambda i: r + i - 1  # noqa: E731
    x = lambda i: 2 * r + i - 1  # noqa: E731
    w = lambda i: 2 * r + v + i - 1  # noqa: E731
    edges = [(x(1), x(i)) for i in range(2, v + 1)]
    edges += [(x(1), y(i)) for i in range(1, r - v + 2)]
    edges += [(x(i), y(r - v + i)) for i in range(2, v + 1)]
    edges += [(y(i), z(i)) for i in range(1, r + 1)]
    edges += [(x(1), w(i)) for i in range(1, n - 2 * r - v + 1)]
    return from_edges(n, edges)


def case2_params(n: int, r: int, v: int) -> FamilyParams:
    if not (1 <= r and 2 * r < n):
        raise InvalidParams(f"need 1 <= r < n/2, got r={r}, n={n}")
    if n - 2 * r >= r:
        raise InvalidParams(f"need n - 2r < r for the chordal construction, got n-2r={n - 2 * r}, r={r}")
    return _slack_params(n, r, v, n - 2 * r, "(n-2r)")


def build_case2_chordal(n: int, r: int, v: int) -> Graph:
    """Connected chordal graph with regularity r and v-number v (needs n - 2r < r).

    Labels: x_1..x_q = 0..q-1 with q = n - 2r, then y_ij for (i, j) in
    lexicographic order, then z_ij in the same order.  x's with t_i > 0 form
    a clique, x's with t_i = 0 hang off x_1, and x_i - y_ij - z_ij are paths.
    """
    params = case2_params(n, r, v)
    q = n - 2 * r
    pairs = [(i, j) for i in range(q) for j in range(params.t[i])]
    ylab = {p: q + k for k, p in enumerate(pairs)}
    zlab = {p: q + r + k for k, p in enumerate(pairs)}
    active = [i for i in range(q) if params.t[i]]
    edges = [(a, b) for ia, a in enumerate(active) for b in active[ia + 1:]]
    edges += [(0, i) for i in range(q) if not params.t[i]]
    for p in pairs:
        edges.append((p[0], ylab[p]))
        edges.append((ylab[p], zlab[p]))
    return from_edges(n, edges)


def build_rv_witness(n: int, r: int, v: int) -> Graph:
    """Tree or chordal witness for (r, v) in A(n), split on n - 2r >= r."""
    if n - 2 * r >= r:
        return build_case1_tree(n, r, v)
    return build_case2_chordal(n, r, v)


def build_whisker(G: Graph) -> Graph:
    """W_G: vertex m + i is a new pendant on base vertex i."""
    m = G.n
    return from_edges(2 * m, G.edges() + [(i, m + i) for i in range(m)])


def whisker_params(n: int, r: int, v: int) -> FamilyParams:
    if n % 2 or n < 4:
        raise InvalidParams(f"need even n = 2m with m >= 2, got n={n}")
    m = n // 2
    if not 1 <= r <= m - 1:
        raise InvalidParams(f"need 1 <= r <= m - 1 = {m - 1}, got r={r}")
    params = _slack_params(n, r, v, m - r, "(m-r)")
    return FamilyParams(n, r, v, params.slack, tuple(x for x in params.t if x))


def whisker_witness_base(n: int, r: int, v: int) -> Graph:
    """Base graph G on m = n/2 vertices with alpha(G) = r and v(W_G) = v.

    Labels: x_1..x_{m-r} = 0..m-r-1 (a clique), then y_ij in lexicographic
    order.  y_ij hangs on x_i for i <= k, and y_11 is also joined to
    x_{k+1}..x_{m-r}.
    """
    params = whisker_params(n, r, v)
    m = n // 2
    q = m - r
    k = len(params.t)
    pairs = [(i, j) for i in range(k) for j in range(params.t[i])]
    ylab = {p: q + idx for idx, p in enumerate(pairs)}
    edges = [(a, b) for a in range(q) for b in range(a + 1, q)]
    edges += [(p[0], ylab[p]) for p in pairs]
    edges += [(ylab[(0, 0)], i) for i in range(k, q)]
    return from_edges(m, edges)


def build_whisker_witness(n: int, r: int, v: int) -> Graph:
    """Connected whisker graph on n vertices with regularity r and v-number v."""
    return build_whisker(whisker_witness_base(n, r, v))


def build_cw(core_edges, s, t) -> Graph:
    """Cameron-Walker graph from its bipartite core.

    Core vertices are ``0..m-1`` (the u side, m = len(s)) and ``m..m+p-1``
    (the w side, p = len(t)); ``core_edges`` uses those labels.  Output labels:
    core vertices first, then the s_i whiskers of each u_i in order, then the
    two tips of each pendant triangle on w_1, w_2, ...
    """
    s = list(s)
    t = list(t)
    m, p = len(s), len(t)
    if any(x < 1 for x in s):
        raise InvalidParams("every u vertex needs at least one whisker (s_i >= 1)")
    if any(x < 0 for x in t):
        raise InvalidParams("triangle counts must be non-negative")
    core = m + p
    edges = []
    for a, b in core_edges:
        if not (0 <= a < core and 0 <= b < core):
            raise InvalidParams(f"core edge ({a}, {b}) outside 0..{core - 1}")
        if (a < m) == (b < m):
            raise CoreNotBipartite(f"core edge ({a}, {b}) joins two vertices on the same side")
        edges.append((a, b))
    core_graph = from_edges(core, edges)
    if core == 0 or not is_connected(core_graph):
        raise CoreDisconnected("core must be a connected bipartite graph")
    if m == 0 or p == 0:
        raise DegenerateStar("core needs vertices on both the whisker and the triangle side")
    nxt = core
    for i, count in enumerate(s):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    for j, count in enumerate(t):
        w = m + j
        for _ in range(count):
            edges += [(w, nxt), (w, nxt + 1), (nxt, nxt + 1)]
            nxt += 2
    G = from_edges(nxt, edges)
    if is_star(G) or is_star_triangle(G):
        raise DegenerateStar("parameters give a star or a star triangle")
    return G


def cw_params(n: int, r: int, v: int) -> FamilyParams:
    if n < 5:
        raise InvalidParams(f"need n >= 5, got n={n}")
    if not 2 <= r <= ceil_div(n - 1, 2):
        raise InvalidParams(f"need 2 <= r <= ceil((n-1)/2) = {ceil_div(n - 1, 2)}, got r={r}")
    vmax = min(r - 1, n - 2 * r)
    if not 1 <= v <= vmax:
        raise InvalidParams(f"need 1 <= v <= min(r-1, n-2r) = {vmax}, got v={v}")
    return FamilyParams(n, r, v)


def build_cw_witness(n: int, r: int, v: int) -> Graph:
    """Triangle-free Cameron-Walker graph with regularity r and v-number v.

    Labels: w_1..w_{n-2r} = 0..n-2r-1, u_1..u_r next, then x_1..x_r; x_i is
    the whisker of u_i.
    """
    cw_params(n, r, v)
    q = n - 2 * r
    w = lambda i: i - 1  # noqa: E731
    u = lambda i: q + i - 1  # noqa: E731
    x = lambda i: q + r + i - 1  # noqa: E731
    edges = [(w(1), u(i)) for i in range(1, r - v + 2)]
    edges += [(w(i), u(r - v + i)) for i in range(2, v + 1)]
    edges += [(w(i), u(r - v + 1)) for i in range(2, q + 1)]
    edges += [(u(i), x(i)) for i in range(1, r + 1)]
    return from_edges(n, edges)


FAMILIES = {
    "tree": build_case1_tree,
    "chordal": build_case2_chordal,
    "whisker": build_whisker_witness,
    "cw": build_cw_witness,
}
