"""Acceptance criteria, each run at full scope with zero tolerance.

Every test appends one PASS/FAIL line to the acceptance summary printed at the
end of the pytest run, then asserts.
"""
import random

import networkx as nx
import pytest

from conftest import ACCEPTANCE_LINES
from edgeideal.enumeration import canonical_form, connected_extensions, connected_graph6, connected_graphs
from edgeideal.families import build_cw_witness, build_rv_witness, build_whisker, build_whisker_witness
from edgeideal.graph import (
    delete_closed_neighborhood,
    delete_vertices,
    emit_graph6,
    from_edges,
    is_connected,
    parse_graph6,
)
from edgeideal.homology import F2, Q, regularity, regularity_hochster
from edgeideal.invariants import (
    edge_domination_number,
    independence_number,
    induced_matching_number,
    matching_number,
    v_number,
)
from edgeideal.recognition import cw_decomposition, is_cameron_walker, is_chordal, is_forest, whisker_decomposition
from edgeideal.rv_sets import (
    empirical_rv,
    formula_A,
    formula_B,
    formula_conjecture_chordal,
    formula_RV_CW,
    formula_RV_W,
    is_connected_whisker,
)

# connected graphs on 1..8 vertices up to isomorphism, as published (OEIS A001349)
A001349 = (1, 1, 2, 6, 21, 112, 853, 11117)


def report(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    extra = f" ({detail})" if detail else ""
    line = f"[{status}] criterion {number}: {title}{extra}"
    if failures:
        line += "\n        " + "\n        ".join(str(f) for f in failures[:10])
    ACCEPTANCE_LINES.append(line)
    assert not failures, line


@pytest.fixture(scope="session")
def corpus():
    """n -> list of (graph, Hochster regularity, v-number) over connected graphs, 3 <= n <= 8."""
    out = {}
    for n in range(3, 9):
        out[n] = [(G, regularity_hochster(G), v_number(G).size) for G in connected_graphs(n)]
    return out


def test_criterion_1_sandwich(corpus):
    failures = []
    for n in range(3, 9):
        rv = {(r, v) for _, r, v in corpus[n]}
        if not formula_A(n) <= rv:
            failures.append(f"n={n}: A(n) not realized: {sorted(formula_A(n) - rv)}")
        if not rv <= formula_B(n):
            failures.append(f"n={n}: outside B(n): {sorted(rv - formula_B(n))}")
        if empirical_rv(n, "all").empirical_set != rv:
            failures.append(f"n={n}: library pipeline disagrees with the direct scan")
    report(1, "A(n) <= RV(n) <= B(n) for n = 3..8", failures,
           f"{sum(len(c) for c in corpus.values())} graphs")


def test_criterion_2_witnesses():
    failures = []
    built = 0
    for n in range(3, 13):
        for r, v in formula_A(n):
            G = build_rv_witness(n, r, v)
            built += 1
            got = (regularity_hochster(G), v_number(G).size)
            if G.n != n or not is_connected(G) or got != (r, v):
                failures.append(f"n={n} (r,v)={(r, v)}: got {got}, connected={is_connected(G)}")
            if n - 2 * r >= r and not is_forest(G):
                failures.append(f"n={n} {(r, v)}: case-I output is not a forest")
            if n - 2 * r < r and not is_chordal(G):
                failures.append(f"n={n} {(r, v)}: case-II output is not chordal")
    report(2, "witness constructors realize A(n), 3 <= n <= 12", failures, f"{built} witnesses")


def test_criterion_3_whisker(corpus):
    failures = []
    for n in (4, 6, 8):
        recognized = {(r, v) for G, r, v in corpus[n] if is_connected_whisker(G)}
        from_bases = set()
        for H in connected_graphs(n // 2):
            W = build_whisker(H)
            from_bases.add((regularity_hochster(W), v_number(W).size))
        if recognized != formula_RV_W(n) or from_bases != formula_RV_W(n):
            failures.append(f"n={n}: formula {sorted(formula_RV_W(n))}, recognized {sorted(recognized)}, "
                            f"from bases {sorted(from_bases)}")
    for n in range(4, 13, 2):
        for r, v in formula_RV_W(n):
            W = build_whisker_witness(n, r, v)
            got = (regularity_hochster(W), v_number(W).size)
            if got != (r, v) or not is_connected_whisker(W):
                failures.append(f"whisker witness n={n} {(r, v)}: got {got}")
    odd_hits = [emit_graph6(G) for n in (3, 5, 7) for G, _, _ in corpus[n] if whisker_decomposition(G)]
    odd_hits += [emit_graph6(G) for G in connected_extensions(9) if whisker_decomposition(G)]
    if odd_hits:
        failures.append(f"odd-order graphs recognized as whisker graphs: {odd_hits[:5]}")
    report(3, "RV_W(n) for n in {4,6,8}, witnesses n <= 12, none at odd n <= 9", failures)


def test_criterion_4_cameron_walker(corpus):
    failures = []
    for n in range(3, 9):
        found = {(r, v) for G, r, v in corpus[n] if is_cameron_walker(G)}
        if found != formula_RV_CW(n):
            failures.append(f"n={n}: formula {sorted(formula_RV_CW(n))}, empirical {sorted(found)}")
    if formula_RV_CW(3) or formula_RV_CW(4):
        failures.append("RV_CW(n) non-empty below 5")
    for n in range(5, 13):
        for r, v in formula_RV_CW(n):
            G = build_cw_witness(n, r, v)
            if not is_cameron_walker(G):
                failures.append(f"n={n} {(r, v)}: witness is not Cameron-Walker")
                continue
            dec = cw_decomposition(G)
            got = (regularity_hochster(G), v_number(G).size)
            if any(dec.t) or dec.regularity != r or got != (r, v):
                failures.append(f"n={n} {(r, v)}: t={dec.t}, m+sum t={dec.regularity}, scan gives {got}")
    report(4, "RV_CW(n) for n = 5..8, empty for n < 5, witnesses n <= 12", failures)


def test_criterion_5_bounds(corpus):
    failures = []
    checked = 0
    for n in range(3, 9):
        for G, reg, v in corpus[n]:
            checked += 1
            key = emit_graph6(G)
            gamma, m, im = edge_domination_number(G), matching_number(G), induced_matching_number(G)
            if v > min(gamma, (n - 1) // 2):
                failures.append(f"{key}: v={v} > min(gamma_e={gamma}, {(n - 1) // 2})")
            if not im <= reg <= m or 2 * reg >= n:
                failures.append(f"{key}: reg={reg}, im={im}, m={m}, n={n}")
            if (is_chordal(G) or is_forest(G)) and reg != im:
                failures.append(f"{key}: chordal with reg={reg} != im={im}")
            wd = whisker_decomposition(G)
            if wd is not None:
                a = independence_number(wd.base_graph(G))
                if not (v <= im == a == reg):
                    failures.append(f"{key}: whisker v={v} im={im} alpha(base)={a} reg={reg}")
            for x in range(n):
                minus = regularity(delete_vertices(G, 1 << x)[0])
                link = regularity(delete_closed_neighborhood(G, x)[0])
                if reg > max(minus, link + 1):
                    failures.append(f"{key}: Dao fails at x={x}: {reg} > max({minus}, {link}+1)")
    report(5, "bound suite over all connected graphs with 3 <= n <= 8", failures, f"{checked} graphs")


def test_criterion_6_oracle_agreement(corpus):
    failures = []
    for n in range(1, 9):
        graphs = [G for G, _, _ in corpus[n]] if n in corpus else list(connected_graphs(n))
        for G in graphs:
            if regularity(G) != regularity_hochster(G):
                failures.append(f"{emit_graph6(G)}: dispatch {regularity(G)} vs scan {regularity_hochster(G)}")
            if n <= 7 and regularity_hochster(G, Q) != regularity_hochster(G, F2):
                failures.append(f"{emit_graph6(G)}: Q and F2 disagree")
    sample = random.Random(20240611).sample(corpus[8], 1000)
    for G, reg, _ in sample:
        if regularity_hochster(G, Q) != reg:
            failures.append(f"{emit_graph6(G)}: Q and F2 disagree")
    report(6, "dispatch = Hochster scan (n <= 8); F2 = Q (n <= 7, 1000 at n = 8)", failures)


def test_criterion_7_planted_p3():
    rng = random.Random(7)
    failures = []
    for trial in range(500):
        k = rng.randint(1, 8)
        p = rng.random()
        edges = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < p]
        x, y, z = rng.randrange(k), k, k + 1
        G = from_edges(k + 2, edges + [(x, y), (y, z)])
        A = v_number(G).A
        if not A & (1 << x | 1 << y | 1 << z):
            failures.append(f"trial {trial}: {emit_graph6(G)} witness misses x={x}, y={y}, z={z}")
    report(7, "every v-witness meets a planted pendant P3 (500 graphs, n <= 10)", failures)


def test_criterion_8_chordal_report(corpus):
    failures = []
    info = []
    for n in range(3, 9):
        found = {(r, v) for G, r, v in corpus[n] if is_chordal(G)}
        if not formula_A(n) <= found:
            failures.append(f"n={n}: A(n) not realized by chordal graphs: {sorted(formula_A(n) - found)}")
        conj = formula_conjecture_chordal(n)
        if found != conj:
            info.append(f"n={n}: missing {sorted(conj - found)}, extra {sorted(found - conj)}")
    detail = "conjectured set matches for every n" if not info else "INFO deviations: " + "; ".join(info)
    report(8, "A(n) <= RV_chordal(n) for n = 3..8", failures, detail)


def test_criterion_9_enumeration():
    failures = []
    counts = tuple(len(connected_graph6(n)) for n in range(1, 9))
    if counts != A001349:
        failures.append(f"counts {counts} != {A001349}")
    for key in connected_graph6(6):
        if emit_graph6(parse_graph6(key)) != key:
            failures.append(f"round trip changed {key}")
        ref = nx.to_graph6_bytes(nx.from_graph6_bytes(key.encode()), header=False).decode().strip()
        if ref != key:
            failures.append(f"reference codec disagrees on {key}")
        if canonical_form(parse_graph6(key)) != key:
            failures.append(f"{key} is not its own canonical form")
    report(9, "connected counts n = 1..8 and graph6 round trip on n = 6", failures, f"counts {counts}")
