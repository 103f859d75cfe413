"""Connected graphs up to isomorphism, and graph6 corpus ingestion."""
from __future__ import annotations

import io
import os
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import FormatError, TooLarge
from .graph import Graph, emit_graph6, is_connected, members, parse_graph6

MAX_CANONICAL_VERTICES = 10
MAX_NATIVE_VERTICES = 8

# connected graphs on n = 1..8 vertices, up to isomorphism
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def _refine(rows, cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable.

    Pieces are ordered by their count vectors, so the result depends only on
    the graph and the input partition, never on vertex labels.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(bin(rows[v] & m).count("1") for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _relabelled_graph6(rows, order: list[int]) -> str:
    n = len(order)
    bits = []
    for j in range(1, n):
        rj = rows[order[j]]
        for i in range(j):
            bits.append(rj >> order[i] & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def _twin_representatives(rows, cell: list[int]) -> list[int]:
    reps = []
    for v in cell:
        for u in reps:
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                break
        else:
            reps.append(v)
    return reps


def canonical_form(G: Graph) -> str:
    """Canonical graph6 key: equal for two graphs iff they are isomorphic.

    Starts from the degree partition, refines it to an equitable one and then
    individualises vertices of the first non-singleton cell, refining again
    after each choice.  The key is the smallest graph6 string over all leaves
    of that search tree.  Twin vertices (same neighbourhood apart from each
    other) are interchangeable, so only one of each twin class is branched on.
    """
    n = G.n
    if n > MAX_CANONICAL_VERTICES:
        raise TooLarge(f"canonical_form supports n <= {MAX_CANONICAL_VERTICES}, got {n}")
    rows = G.rows
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(bin(rows[v]).count("1"), []).append(v)
    start = _refine(rows, [by_degree[d] for d in sorted(by_degree)])
    best = None
    stack = [start]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            key = _relabelled_graph6(rows, [c[0] for c in cells])
            if best is None or key < best:
                best = key
            continue
        cell = cells[target]
        for v in _twin_representatives(rows, cell):
            rest = [u for u in cell if u != v]
            stack.append(_refine(rows, cells[:target] + [[v], rest] + cells[target + 1:]))
    return best if best is not None else chr(63)


def canonical_graph(G: Graph) -> Graph:
    return parse_graph6(canonical_form(G))


def _extend(G: Graph, neighbours: int) -> Graph:
    n = G.n
    rows = list(G.rows)
    for u in members(neighbours):
        rows[u] |= 1 << n
    rows.append(neighbours)
    return Graph(n + 1, tuple(rows))


@lru_cache(maxsize=None)
def _connected_keys(n: int) -> tuple[str, ...]:
    if n == 1:
        return (canonical_form(Graph(1, (0,))),)
    keys = set()
    for key in _connected_keys(n - 1):
        parent = parse_graph6(key)
        for S in range(1, 1 << (n - 1)):
            keys.add(canonical_form(_extend(parent, S)))
    return tuple(sorted(keys))


def connected_graphs(n: int) -> Iterator[Graph]:
    """One representative (in canonical labelling) per isomorphism class of
    connected graphs on n vertices, in sorted key order.

    Built by adding a vertex to every (n-1)-vertex class over all non-empty
    neighbourhoods; every connected graph has a vertex whose removal keeps it
    connected, so nothing is missed.
    """
    if not 1 <= n <= MAX_NATIVE_VERTICES:
        raise TooLarge(f"native generation supports 1 <= n <= {MAX_NATIVE_VERTICES}; "
                       f"pass a graph6 corpus for n={n}")
    for key in _connected_keys(n):
        yield parse_graph6(key)


def connected_graph6(n: int) -> tuple[str, ...]:
    """Canonical graph6 keys of :func:`connected_graphs` (cached)."""
    if not 1 <= n <= MAX_NATIVE_VERTICES:
        raise TooLarge(f"native generation supports 1 <= n <= {MAX_NATIVE_VERTICES}; "
                       f"pass a graph6 corpus for n={n}")
    return _connected_keys(n)


def connected_extensions(n: int) -> Iterator[Graph]:
    """Every graph obtained from a connected (n-1)-vertex class by adding one
    vertex with a non-empty neighbourhood, without isomorphism dedupe.

    Covers all connected n-vertex graphs (with repeats) one size beyond
    native generation, which is enough for checks that hold per graph.
    """
    if not 2 <= n <= MAX_NATIVE_VERTICES + 1:
        raise TooLarge(f"extensions support 2 <= n <= {MAX_NATIVE_VERTICES + 1}, got n={n}")
    for key in _connected_keys(n - 1):
        parent = parse_graph6(key)
        for S in range(1, 1 << (n - 1)):
            yield _extend(parent, S)


def _lines(source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="ascii", errors="replace") as fh:
            yield from fh
    elif isinstance(source, (io.IOBase,)) or hasattr(source, "read"):
        for line in source:
            yield line.decode("ascii", errors="replace") if isinstance(line, bytes) else line
    else:
        for line in source:
            yield line.decode("ascii", errors="replace") if isinstance(line, bytes) else line


def read_graph6_stream(source, connected_only: bool = False) -> Iterator[Graph]:
    """Graphs from a graph6 file path, open file or iterable of lines.

    Blank lines are skipped; a malformed line raises FormatError naming it.
    """
    for lineno, line in enumerate(_lines(source), start=1):
        text = line.strip()
        if not text:
            continue
        try:
            G = parse_graph6(text)
        except FormatError as exc:
            raise FormatError(f"bad graph6: {exc}", line=lineno) from exc
        if connected_only and not is_connected(G):
            continue
        yield G


def write_graph6_stream(graphs: Iterable[Graph], fh) -> int:
    count = 0
    for G in graphs:
        fh.write(emit_graph6(G) + "\n")
        count += 1
    return count
