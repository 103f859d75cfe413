"""Independence complexes, reduced homology, and regularity of R/I(G).

Regularity is read off Hochster's formula: beta_{i,j}(R/I(G)) is the sum over
j-subsets W of dim H~_{j-i-1}(Ind(G[W])), so

    reg(R/I(G)) = max{ k + 1 : H~_k(Ind(G[W])) != 0 for some W }.

Homology is computed over GF(2) (bit-packed elimination) or over Q (exact
integer elimination).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .errors import SubsetScanTooLarge
from .graph import Graph, members, popcount

F2 = "f2"
Q = "q"
FIELDS = (F2, Q)
MAX_SCAN_VERTICES = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces; ``faces_by_dim[d]`` holds the
    (d+1)-element faces as sorted vertex bitmasks.  The empty face is implicit."""

    vertices: int
    faces_by_dim: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 1

    def f_vector(self) -> list[int]:
        return [len(f) for f in self.faces_by_dim]

    def is_closed(self) -> bool:
        present = set().union(*self.faces_by_dim) if self.faces_by_dim else set()
        for faces in self.faces_by_dim[1:]:
            for f in faces:
                for v in members(f):
                    if f & ~(1 << v) not in present:
                        return False
        return True


@dataclass(frozen=True)
class HomologyProfile:
    """``ranks[d]`` = dim H~_d for d >= 0; ``rank_minus_one`` is 1 only for the
    complex whose sole face is the empty one."""

    ranks: tuple[int, ...]
    field: str
    rank_minus_one: int = 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in enumerate(self.ranks)) - self.rank_minus_one

    def top_nonzero(self) -> int:
        """Largest d with a non-zero rank, or -2 when acyclic."""
        for d in range(len(self.ranks) - 1, -1, -1):
            if self.ranks[d]:
                return d
        return -1 if self.rank_minus_one else -2


def _independent_sets_by_size(G: Graph, within: int) -> list[list[int]]:
    rows = G.rows
    by_size: list[list[int]] = [[0]]

    def grow(face: int, size: int, avail: int) -> None:
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail ^= low
            new = face | low
            if len(by_size) <= size + 1:
                by_size.append([])
            by_size[size + 1].append(new)
            grow(new, size + 1, avail & ~rows[v])

    grow(0, 0, within)
    for faces in by_size:
        faces.sort()
    return by_size


def independence_complex(G: Graph) -> SimplicialComplex:
    """Ind(G): faces are the non-empty independent sets of G."""
    by_size = _independent_sets_by_size(G, G.vertex_mask)
    return SimplicialComplex(G.n, tuple(tuple(f) for f in by_size[1:]))


def _rank_f2(columns: list[int]) -> int:
    basis: dict[int, int] = {}
    for col in columns:
        while col:
            top = col.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = col
                break
            col ^= b
    return len(basis)


def _rank_q(columns: list[dict[int, int]]) -> int:
    """Rank of an integer matrix given as sparse columns, by exact elimination."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = dict(col)
        while col:
            top = max(col)
            piv = pivots.get(top)
            if piv is None:
                g = 0
                for c in col.values():
                    g = gcd(g, c)
                pivots[top] = {k: c // g for k, c in col.items()}
                rank += 1
                break
            a, b = piv[top], col[top]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for k in col.keys() | piv.keys():
                c = fa * col.get(k, 0) - fb * piv.get(k, 0)
                if c:
                    new[k] = c
            col = new
    return rank


def boundary_rank(faces: Sequence[int], lower: Sequence[int], field: str = F2) -> int:
    """Rank of the boundary map from ``faces`` (size s) to ``lower`` (size s-1)."""
    if not faces:
        return 0
    if not lower:
        # lower is the empty face only: the augmentation map
        return 1
    index = {f: i for i, f in enumerate(lower)}
    if field == F2:
        cols = []
        for f in faces:
            c = 0
            for v in members(f):
                c ^= 1 << index[f & ~(1 << v)]
            cols.append(c)
        return _rank_f2(cols)
    if field == Q:
        qcols = []
        for f in faces:
            c = {}
            for sign_pos, v in enumerate(members(f)):
                c[index[f & ~(1 << v)]] = -1 if sign_pos % 2 else 1
            qcols.append(c)
        return _rank_q(qcols)
    raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


def _homology_ranks(by_size: list[list[int]], dims: range, field: str) -> dict[int, int]:
    """dim H~_k for k in ``dims``; ``by_size[s]`` lists the s-element faces
    (``by_size[0] == [0]``, the empty face)."""
    cache: dict[int, int] = {}

    def rank_d(k: int) -> int:
        # boundary from k-faces (k+1 elements) to (k-1)-faces
        if k not in cache:
            if k + 1 >= len(by_size):
                cache[k] = 0
            else:
                lower = by_size[k] if k >= 1 else []
                cache[k] = boundary_rank(by_size[k + 1], lower, field)
        return cache[k]

    out = {}
    for k in dims:
        fk = len(by_size[k + 1]) if k + 1 < len(by_size) else 0
        out[k] = fk - rank_d(k) - rank_d(k + 1)
    return out


def reduced_homology(K: SimplicialComplex, field: str = F2) -> HomologyProfile:
    by_size = [[0]] + [list(f) for f in K.faces_by_dim]
    while len(by_size) > 1 and not by_size[-1]:
        by_size.pop()
    if len(by_size) == 1:
        return HomologyProfile((), field, 1)
    ranks = _homology_ranks(by_size, range(len(by_size) - 1), field)
    return HomologyProfile(tuple(ranks[d] for d in range(len(by_size) - 1)), field, 0)


def _has_isolated_vertex(rows: Sequence[int], W: int) -> bool:
    w = W
    while w:
        low = w & -w
        if rows[low.bit_length() - 1] & W == 0:
            return True
        w ^= low
    return False


def _subset_top_degree(G: Graph, W: int, floor: int, field: str) -> int:
    """Largest k+1 > floor with H~_k(Ind(G[W])) != 0, else 0.

    Independence complexes of graphs with an isolated vertex are cones, and
    H~_k can be non-zero only when |W| >= 2(k+1).
    """
    rows = G.rows
    size = popcount(W)
    if _has_isolated_vertex(rows, W):
        return 0
    hi = size // 2 - 1
    if hi < floor:
        return 0
    by_size = _independent_sets_by_size(G, W)
    hi = min(hi, len(by_size) - 2)
    if hi < floor:
        return 0
    ranks = _homology_ranks(by_size, range(floor, hi + 1), field)
    for k in range(hi, floor - 1, -1):
        if ranks[k]:
            return k + 1
    return 0


def _subsets_by_decreasing_size(n: int):
    for size in range(n, 0, -1):
        x = (1 << size) - 1
        limit = 1 << n
        while x < limit:
            yield x
            c = x & -x
            r = x + c
            x = (((r ^ x) >> 2) // c) | r


def regularity_hochster(G: Graph, field: str = F2) -> int:
    """reg(R/I(G)) from reduced homology of all induced independence complexes.

    Subsets are scanned largest first; a subset is skipped when it is too
    small to beat the current value, and the scan stops once the matching
    number (an upper bound for the regularity) is reached.
    """
    if G.n > MAX_SCAN_VERTICES:
        raise SubsetScanTooLarge(f"subset scan needs n <= {MAX_SCAN_VERTICES}, got {G.n}")
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")
    return _hochster_cached(G, field)


@lru_cache(maxsize=1 << 16)
def _hochster_cached(G: Graph, field: str) -> int:
    if G.num_edges == 0:
        return 0
    from .invariants import matching_number

    ceiling = matching_number(G)
    best = 1  # any edge: Ind(K2) is two points
    if best == ceiling:
        return best
    for W in _subsets_by_decreasing_size(G.n):
        if popcount(W) < 2 * (best + 1):
            break
        top = _subset_top_degree(G, W, best, field)
        if top > best:
            best = top
            if best >= ceiling:
                break
    return best


def induced_regularity_table(G: Graph, field: str = F2) -> list[int]:
    """``table[W]`` = reg(R/I(G[W])) for every vertex subset W.

    One homology computation per subset followed by a subset-maximum
    transform; used to check inequalities involving many induced subgraphs.
    """
    if G.n > MAX_SCAN_VERTICES:
        raise SubsetScanTooLarge(f"subset scan needs n <= {MAX_SCAN_VERTICES}, got {G.n}")
    table = [0] * (1 << G.n)
    for W in range(1, 1 << G.n):
        table[W] = _subset_top_degree(G, W, 0, field)
    for i in range(G.n):
        bit = 1 << i
        for W in range(1 << G.n):
            if W & bit and table[W ^ bit] > table[W]:
                table[W] = table[W ^ bit]
    return table


def regularity(G: Graph, field: str = F2) -> int:
    """reg(R/I(G)) using structural formulas where they apply.

    chordal (forests included): im(G); whisker graph W_H: alpha(H);
    Cameron-Walker: m + sum(t_j); anything else falls back to the Hochster scan.
    """
    return _regularity_cached(G, field)


@lru_cache(maxsize=1 << 16)
def _regularity_cached(G: Graph, field: str) -> int:
    from .invariants import independence_number, induced_matching_number
    from .recognition import cw_decomposition, is_cameron_walker, is_chordal, whisker_decomposition

    if G.num_edges == 0:
        return 0
    if is_chordal(G):
        return induced_matching_number(G)
    wd = whisker_decomposition(G)
    if wd is not None:
        return independence_number(wd.base_graph(G))
    if is_cameron_walker(G):
        return cw_decomposition(G).regularity
    return regularity_hochster(G, field)


def regularity_route(G: Graph) -> str:
    """Name of the branch :func:`regularity` takes for G."""
    from .recognition import is_cameron_walker, is_chordal, whisker_decomposition

    if G.num_edges == 0:
        return "edgeless"
    if is_chordal(G):
        return "chordal"
    if whisker_decomposition(G) is not None:
        return "whisker"
    if is_cameron_walker(G):
        return "cameron_walker"
    return "hochster"
