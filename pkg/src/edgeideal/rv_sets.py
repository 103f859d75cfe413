"""Lattice sets of (regularity, v-number) pairs: closed-form and enumerated."""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .enumeration import MAX_CANONICAL_VERTICES, MAX_NATIVE_VERTICES, canonical_form, connected_graph6, read_graph6_stream
from .errors import InvalidN, TooLarge, UnknownClass
from .families import ceil_div
from .graph import Graph, emit_graph6, induced_subgraph, is_connected, parse_graph6
from .homology import F2, regularity
from .invariants import v_number
from .recognition import is_bipartite, is_cameron_walker, is_chordal, is_forest, whisker_decomposition

Point = tuple[int, int]

CLASSES = ("all", "chordal", "bipartite", "forest", "whisker", "cameron_walker")
CLASS_ALIASES = {"cw": "cameron_walker", "cameron-walker": "cameron_walker"}


class LatticeSet(frozenset):
    """Finite set of (r, v) points; iterates and prints in sorted order."""

    def __new__(cls, points: Iterable[Point] = ()):
        return super().__new__(cls, (tuple(p) for p in points))

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    @property
    def points(self) -> list[Point]:
        return sorted(frozenset.__iter__(self))

    def __or__(self, other):
        return LatticeSet(frozenset.__or__(self, other))

    def __and__(self, other):
        return LatticeSet(frozenset.__and__(self, other))

    def __sub__(self, other):
        return LatticeSet(frozenset.__sub__(self, other))

    def __repr__(self):
        return f"LatticeSet({self.points})"


def _a_rows(n: int) -> list[Point]:
    pts = []
    r = 1
    while 2 * r < n:
        top = r - ceil_div(r, n - 2 * r) + 1
        pts += [(r, v) for v in range(1, top + 1)]
        r += 1
    return pts


def formula_A(n: int) -> LatticeSet:
    """1 <= r < n/2 and 1 <= v <= r - ceil(r / (n - 2r)) + 1."""
    if n < 3:
        raise InvalidN(f"A(n) is defined for n >= 3, got {n}")
    return LatticeSet(_a_rows(n))


def formula_B(n: int) -> LatticeSet:
    """1 <= r < n/2 and 1 <= v < n/2."""
    if n < 3:
        raise InvalidN(f"B(n) is defined for n >= 3, got {n}")
    half = (n - 1) // 2
    return LatticeSet((r, v) for r in range(1, half + 1) for v in range(1, half + 1))


def formula_RV_W(n: int) -> LatticeSet:
    """Whisker graphs on n = 2m vertices; empty for odd n."""
    if n % 2:
        return LatticeSet()
    m = n // 2
    pts = []
    for r in range(1, m):
        top = r - ceil_div(r, m - r) + 1
        pts += [(r, v) for v in range(1, top + 1)]
    return LatticeSet(pts)


def formula_RV_CW(n: int) -> LatticeSet:
    """Cameron-Walker graphs; empty for n < 5."""
    if n < 5:
        return LatticeSet()
    pts = []
    for r in range(2, ceil_div(n - 1, 2) + 1):
        pts += [(r, v) for v in range(1, min(r - 1, n - 2 * r) + 1)]
    return LatticeSet(pts)


def formula_conjecture_chordal(n: int) -> LatticeSet:
    """Conjectured chordal set; the same inequalities as A(n)."""
    if n < 3:
        raise InvalidN(f"the chordal conjecture is stated for n >= 3, got {n}")
    return LatticeSet(_a_rows(n))


def compare(formula: Iterable[Point], empirical: Iterable[Point]) -> tuple[LatticeSet, LatticeSet]:
    """(formula - empirical, empirical - formula)."""
    formula, empirical = LatticeSet(formula), LatticeSet(empirical)
    return formula - empirical, empirical - formula


def normalize_class(name: str) -> str:
    key = CLASS_ALIASES.get(name.lower(), name.lower())
    if key not in CLASSES:
        raise UnknownClass(f"unknown class {name!r}; choose from {', '.join(CLASSES)}")
    return key


def is_connected_whisker(G: Graph) -> bool:
    """Whisker graph W_H with H connected on at least two vertices."""
    if G.n < 4 or G.n % 2:
        return False
    wd = whisker_decomposition(G)
    return wd is not None and is_connected(induced_subgraph(G, wd.base)[0])


CLASS_PREDICATES = {
    "all": lambda G: True,
    "chordal": is_chordal,
    "bipartite": is_bipartite,
    "forest": is_forest,
    "whisker": is_connected_whisker,
    "cameron_walker": is_cameron_walker,
}


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # PASS, FAIL or INFO
    detail: str = ""


@dataclass
class RVReport:
    n: int
    class_name: str
    formula_set: LatticeSet
    empirical_set: LatticeSet
    missing: LatticeSet
    extra: LatticeSet
    witnesses: dict[Point, str]
    upper_set: LatticeSet | None = None
    graphs_examined: int = 0
    graphs_in_class: int = 0
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "class": self.class_name,
            "formula": [list(p) for p in self.formula_set],
            "empirical": [list(p) for p in self.empirical_set],
            "missing": [list(p) for p in self.missing],
            "extra": [list(p) for p in self.extra],
            "witnesses": {f"{r},{v}": g6 for (r, v), g6 in sorted(self.witnesses.items())},
            "graphs_examined": self.graphs_examined,
            "graphs_in_class": self.graphs_in_class,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
        }
        if self.upper_set is not None:
            out["upper"] = [list(p) for p in self.upper_set]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "class", "r", "v", "in_formula", "in_empirical", "in_upper", "witness"])
        upper = self.upper_set or LatticeSet()
        for p in self.formula_set | self.empirical_set | upper:
            writer.writerow([
                self.n, self.class_name, p[0], p[1],
                int(p in self.formula_set), int(p in self.empirical_set),
                int(p in upper) if self.upper_set is not None else "",
                self.witnesses.get(p, ""),
            ])
        return buf.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> "RVReport":
        def pts(key):
            return LatticeSet(tuple(p) for p in data.get(key, []))

        witnesses = {}
        for key, g6 in data.get("witnesses", {}).items():
            r, v = key.split(",")
            witnesses[(int(r), int(v))] = g6
        return cls(
            n=int(data["n"]),
            class_name=data["class"],
            formula_set=pts("formula"),
            empirical_set=pts("empirical"),
            missing=pts("missing"),
            extra=pts("extra"),
            witnesses=witnesses,
            upper_set=pts("upper") if "upper" in data else None,
            graphs_examined=int(data.get("graphs_examined", 0)),
            graphs_in_class=int(data.get("graphs_in_class", 0)),
            checks=[Check(c["name"], c["status"], c.get("detail", "")) for c in data.get("checks", [])],
        )

    @classmethod
    def from_json(cls, text: str) -> "RVReport":
        return cls.from_dict(json.loads(text))


def classify_point(g6: str, class_name: str, field: str = F2) -> tuple[str, Point | None]:
    """(g6, (reg, v)) if the graph belongs to the class, else (g6, None)."""
    G = parse_graph6(g6)
    if G.num_edges == 0 or not CLASS_PREDICATES[class_name](G):
        return g6, None
    return g6, (regularity(G, field), v_number(G).size)


def _classify_chunk(args) -> list[tuple[str, Point | None]]:
    chunk, class_name, field = args
    return [classify_point(g6, class_name, field) for g6 in chunk]


def default_workers() -> int:
    env = os.environ.get("EDGEIDEAL_THREADS")
    if env:
        return max(1, int(env))
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)


def _graph_keys(n: int, corpus) -> list[str]:
    if corpus is None:
        if n > MAX_NATIVE_VERTICES:
            raise TooLarge(f"n={n} needs a graph6 corpus (native generation stops at {MAX_NATIVE_VERTICES})")
        return list(connected_graph6(n))
    keys = set()
    for G in read_graph6_stream(corpus, connected_only=True):
        if G.n == n:
            keys.add(canonical_form(G) if n <= MAX_CANONICAL_VERTICES else emit_graph6(G))
    return sorted(keys)


def _formula_for(n: int, class_name: str) -> tuple[LatticeSet, LatticeSet | None]:
    upper = formula_B(n) if n >= 3 else None
    if class_name == "all":
        return formula_A(n), upper
    if class_name == "chordal":
        return formula_conjecture_chordal(n), upper
    if class_name == "whisker":
        return formula_RV_W(n), upper
    if class_name == "cameron_walker":
        return formula_RV_CW(n), upper
    return (upper if upper is not None else LatticeSet()), upper


def _checks(n: int, class_name: str, formula: LatticeSet, empirical: LatticeSet,
            upper: LatticeSet | None) -> list[Check]:
    missing, extra = compare(formula, empirical)
    checks = []

    def fmt(s):
        return "{" + ", ".join(f"({r},{v})" for r, v in s) + "}"

    if upper is not None:
        beyond = empirical - upper
        checks.append(Check(f"n={n} {class_name}: empirical within B(n)",
                            "FAIL" if beyond else "PASS", f"outside B: {fmt(beyond)}" if beyond else ""))
    if class_name in ("all", "chordal"):
        label = "A(n) realized" if class_name == "all" else "A(n) realized by chordal graphs"
        checks.append(Check(f"n={n} {class_name}: {label}",
                            "FAIL" if missing else "PASS", f"missing: {fmt(missing)}" if missing else ""))
    if class_name == "chordal":
        same = not missing and not extra
        checks.append(Check(f"n={n} chordal: equals conjectured set", "INFO",
                            "equal" if same else f"missing {fmt(missing)}, extra {fmt(extra)}"))
    if class_name in ("whisker", "cameron_walker"):
        same = not missing and not extra
        checks.append(Check(f"n={n} {class_name}: equals closed-form set",
                            "PASS" if same else "FAIL",
                            "" if same else f"missing {fmt(missing)}, extra {fmt(extra)}"))
    if class_name in ("bipartite", "forest"):
        checks.append(Check(f"n={n} {class_name}: points realized", "INFO", fmt(empirical)))
    return checks


def empirical_rv(n: int, class_filter: str = "all", corpus=None, field: str = F2,
                 workers: int = 1) -> RVReport:
    """Enumerate connected n-vertex graphs of a class and collect (reg, v).

    ``corpus`` (graph6 path or iterable of lines) replaces native generation
    and is required for n > 8.  The witness stored per point is the graph
    with the smallest canonical key, so reports do not depend on ``workers``.
    """
    class_name = normalize_class(class_filter)
    if n < 3:
        raise InvalidN(f"lattice-set reports need n >= 3, got {n}")
    keys = _graph_keys(n, corpus)
    if workers > 1 and len(keys) > 256:
        size = max(64, len(keys) // (workers * 8))
        chunks = [(keys[i:i + size], class_name, field) for i in range(0, len(keys), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [item for part in pool.map(_classify_chunk, chunks) for item in part]
    else:
        results = [classify_point(g6, class_name, field) for g6 in keys]
    witnesses: dict[Point, str] = {}
    in_class = 0
    for g6, point in results:
        if point is None:
            continue
        in_class += 1
        if point not in witnesses or g6 < witnesses[point]:
            witnesses[point] = g6
    empirical = LatticeSet(witnesses)
    formula, upper = _formula_for(n, class_name)
    missing, extra = compare(formula, empirical)
    return RVReport(
        n=n,
        class_name=class_name,
        formula_set=formula,
        empirical_set=empirical,
        missing=missing,
        extra=extra,
        witnesses=witnesses,
        upper_set=upper,
        graphs_examined=len(keys),
        graphs_in_class=in_class,
        checks=_checks(n, class_name, formula, empirical, upper),
    )


def revalidate_witnesses(report: RVReport, field: str = F2) -> list[Point]:
    """Points whose stored witness does not reproduce them (empty when sound)."""
    bad = []
    for point, g6 in report.witnesses.items():
        G = parse_graph6(g6)
        if (regularity(G, field), v_number(G).size) != point:
            bad.append(point)
    return sorted(bad)
