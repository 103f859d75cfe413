"""Brute-force reference computations, deliberately independent of the
bitmask code in the package: plain Python sets, itertools and networkx."""
from __future__ import annotations

from itertools import combinations

import networkx as nx
import sympy


def to_nx(G) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def _is_independent(H, S):
    return not any(H.has_edge(a, b) for a, b in combinations(S, 2))


def alpha(H: nx.Graph) -> int:
    nodes = list(H)
    for k in range(len(nodes), -1, -1):
        if any(_is_independent(H, S) for S in combinations(nodes, k)):
            return k
    return 0


def _matchings(H):
    """Every matching of H, each produced once (edges taken in sorted order)."""
    edges = sorted(tuple(sorted(e)) for e in H.edges())

    def extend(start, used, chosen):
        yield tuple(chosen)
        for i in range(start, len(edges)):
            a, b = edges[i]
            if a not in used and b not in used:
                chosen.append(edges[i])
                yield from extend(i + 1, used | {a, b}, chosen)
                chosen.pop()

    yield from extend(0, frozenset(), [])


def matching_number(H) -> int:
    return max(len(M) for M in _matchings(H))


def induced_matching_number(H) -> int:
    best = 0
    for M in _matchings(H):
        verts = {x for e in M for x in e}
        if H.subgraph(verts).number_of_edges() == len(M):
            best = max(best, len(M))
    return best


def edge_domination_number(H) -> int:
    best = None
    for M in _matchings(H):
        verts = {x for e in M for x in e}
        if all(a in verts or b in verts for a, b in H.edges()):
            if best is None or len(M) < best:
                best = len(M)
    return best


def v_number(H) -> int:
    nodes = list(H)
    for k in range(1, len(nodes) + 1):
        for A in combinations(nodes, k):
            if not _is_independent(H, A):
                continue
            NA = set().union(*(set(H[a]) for a in A))
            if all(a in NA or b in NA for a, b in H.edges()):
                return k
    raise ValueError("edgeless graph")


def reduced_betti_q(faces: list[frozenset]) -> dict[int, int]:
    """Reduced homology ranks over Q from explicit faces via sympy ranks."""
    by_dim: dict[int, list[tuple]] = {-1: [()]}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(by_dim)
    ranks = {}

    def boundary_rank(d):
        if d not in by_dim or d - 1 not in by_dim or d < 0:
            return 0
        lower = {f: i for i, f in enumerate(sorted(by_dim[d - 1]))}
        M = sympy.zeros(len(lower), len(by_dim[d]))
        for j, f in enumerate(sorted(by_dim[d])):
            for i in range(len(f)):
                M[lower[f[:i] + f[i + 1:]], j] = (-1) ** i
        return M.rank()

    for d in range(-1, top + 1):
        fd = len(by_dim.get(d, []))
        ranks[d] = fd - boundary_rank(d) - boundary_rank(d + 1)
    return ranks


def regularity_bruteforce(H) -> int:
    """Hochster scan with no pruning at all, ranks over Q by sympy."""
    nodes = list(H)
    best = 0
    for k in range(1, len(nodes) + 1):
        for W in combinations(nodes, k):
            faces = [frozenset(S) for j in range(1, k + 1) for S in combinations(W, j)
                     if _is_independent(H, S)]
            for d, rank in reduced_betti_q(faces).items():
                if rank and d >= 0:
                    best = max(best, d + 1)
    return best


def graph6_reference(G) -> str:
    return nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
