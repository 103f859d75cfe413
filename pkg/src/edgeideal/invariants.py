"""Exact combinatorial invariants of a graph and of its edge ideal.

Everything here is exhaustive search over bitmasks with memoisation; the
intended range is n <= 16.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NoEdges
from .graph import Graph, VertexSet, emit_graph6, members, popcount


@dataclass(frozen=True)
class VWitness:
    """Independent set ``A`` whose neighbourhood ``cover`` is a vertex cover.

    The monomial ``prod(x for x in A)`` satisfies ``(I(G) : X_A) = <N(A)>``.
    """

    A: VertexSet
    cover: VertexSet
    size: int

    @property
    def vertices(self) -> list[int]:
        return members(self.A)


@dataclass(frozen=True)
class InvariantRecord:
    alpha: int
    matching: int
    induced_matching: int
    edge_domination: int
    v_number: int
    regularity: int
    graph6_key: str

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6_key,
            "alpha": self.alpha,
            "matching": self.matching,
            "induced_matching": self.induced_matching,
            "edge_domination": self.edge_domination,
            "v_number": self.v_number,
            "regularity": self.regularity,
        }


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def max_independent_in(G: Graph, candidates: VertexSet) -> int:
    """Size of a largest independent set inside ``candidates``."""
    rows = G.rows
    best = 0

    def search(P: int, size: int) -> None:
        nonlocal best
        if size + popcount(P) <= best:
            return
        # vertices of degree <= 1 inside P can always be taken greedily
        while P:
            pick = -1
            for v in members(P):
                if popcount(rows[v] & P) <= 1:
                    pick = v
                    break
            if pick < 0:
                break
            P &= ~(rows[pick] | 1 << pick)
            size += 1
        if not P:
            best = max(best, size)
            return
        if size + popcount(P) <= best:
            return
        v = max(members(P), key=lambda x: popcount(rows[x] & P))
        search(P & ~(rows[v] | 1 << v), size + 1)
        search(P & ~(1 << v), size)

    search(candidates, 0)
    return best


def independence_number(G: Graph) -> int:
    """alpha(G), by branch and bound."""
    return max_independent_in(G, G.vertex_mask)


def _matching_solver(G: Graph):
    rows = G.rows

    @lru_cache(maxsize=None)
    def mat(S: int) -> int:
        if not S:
            return 0
        v = _low(S)
        rest = S & ~(1 << v)
        best = mat(rest)
        for u in members(rows[v] & rest):
            best = max(best, 1 + mat(rest & ~(1 << u)))
        return best

    return mat


def matching_number(G: Graph) -> int:
    """m(G), maximum matching size (exact for general graphs)."""
    return _matching_solver(G)(G.vertex_mask)


def induced_matching_number(G: Graph) -> int:
    """im(G): branch on the least available vertex being unmatched or matched."""
    rows = G.rows

    @lru_cache(maxsize=None)
    def im(S: int) -> int:
        # drop vertices without a neighbour in S; they cannot be matched
        for v in members(S):
            if rows[v] & S == 0:
                S &= ~(1 << v)
        if not S:
            return 0
        v = _low(S)
        best = im(S & ~(1 << v))
        closed_v = rows[v] | 1 << v
        for u in members(rows[v] & S):
            best = max(best, 1 + im(S & ~(closed_v | rows[u] | 1 << u)))
        return best

    return im(G.vertex_mask)


def edge_domination_number(G: Graph) -> int:
    """gamma_e(G), the minimum size of a maximal matching.

    A maximal matching M leaves an independent set I = V - V(M) behind and
    is a perfect matching of G - I; conversely any such pair gives a maximal
    matching.  So gamma_e = min (n - |I|) / 2 over independent I for which
    G - I has a perfect matching.
    """
    if G.num_edges == 0:
        raise NoEdges()
    mat = _matching_solver(G)
    full = G.vertex_mask
    rows = G.rows
    best = G.n

    def walk(avail: int, chosen: int) -> None:
        nonlocal best
        rest = full & ~chosen
        k = popcount(rest)
        if k % 2 == 0 and k < 2 * best and mat(rest) * 2 == k:
            best = k // 2
        while avail:
            v = _low(avail)
            avail &= ~(1 << v)
            walk(avail & ~rows[v], chosen | 1 << v)

    walk(full, 0)
    return best


def _masks_of_popcount(n: int, k: int):
    """All n-bit masks with k bits set, in increasing numeric order (Gosper)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def forced_p3_triples(G: Graph) -> list[VertexSet]:
    """Disjoint triples {x, y, z} with x-y-z a path, deg y = 2, deg z = 1.

    Greedy over ``y`` in label order.  Every independent set whose
    neighbourhood is a vertex cover meets each such triple, so the number of
    triples is a lower bound for the v-number.
    """
    rows = G.rows
    used = 0
    triples = []
    for y in range(G.n):
        if popcount(rows[y]) != 2 or used >> y & 1:
            continue
        a, b = members(rows[y])
        for z, x in ((a, b), (b, a)):
            if popcount(rows[z]) == 1:
                T = 1 << x | 1 << y | 1 << z
                if T & used == 0:
                    triples.append(T)
                    used |= T
                break
    return triples


def covers_all_edges(G: Graph, C: VertexSet) -> bool:
    rest = G.vertex_mask & ~C
    rows = G.rows
    while rest:
        v = _low(rest)
        if rows[v] & rest:
            return False
        rest &= ~(1 << v)
    return True


def v_number(G: Graph) -> VWitness:
    """Minimum independent A with N(A) a vertex cover.

    Sizes are tried in increasing order starting from the forced-triple lower
    bound; within a size the numerically smallest bitmask wins.
    """
    if G.num_edges == 0:
        raise NoEdges()
    rows = G.rows
    n = G.n
    start = max(1, len(forced_p3_triples(G)))
    for k in range(start, n + 1):
        for A in _masks_of_popcount(n, k):
            cover = 0
            ok = True
            for a in members(A):
                if rows[a] & A:
                    ok = False
                    break
                cover |= rows[a]
            if ok and covers_all_edges(G, cover):
                return VWitness(A, cover, k)
    raise AssertionError("unreachable: a maximal independent set always works")


def invariant_record(G: Graph, regularity: int | None = None) -> InvariantRecord:
    """All six invariants of G.  Regularity defaults to the dispatching solver."""
    if regularity is None:
        from .homology import regularity as _reg
        regularity = _reg(G)
    return InvariantRecord(
        alpha=independence_number(G),
        matching=matching_number(G),
        induced_matching=induced_matching_number(G),
        edge_domination=edge_domination_number(G),
        v_number=v_number(G).size,
        regularity=regularity,
        graph6_key=emit_graph6(G),
    )
