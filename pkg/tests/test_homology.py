import random
from itertools import combinations

import pytest
from hypothesis import given, settings

import oracles
from conftest import graphs
from edgeideal.errors import SubsetScanTooLarge
from edgeideal.families import build_case2_chordal, build_cw, build_cw_witness, build_whisker
from edgeideal.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    induced_subgraph,
    members,
    path_graph,
)
from edgeideal.homology import (
    F2,
    Q,
    boundary_rank,
    independence_complex,
    induced_regularity_table,
    reduced_homology,
    regularity,
    regularity_hochster,
    regularity_route,
)
from edgeideal.invariants import induced_matching_number, matching_number


def faces_of(K):
    return [frozenset(members(f)) for dim in K.faces_by_dim for f in dim]


def test_complex_examples(C5):
    K = independence_complex(complete_graph(3))
    assert K.f_vector() == [3]
    K = independence_complex(C5)
    assert K.f_vector() == [5, 5]
    assert sorted(members(f) for f in K.faces_by_dim[1]) == sorted(
        sorted((i, (i + 2) % 5)) for i in range(5))
    K = independence_complex(empty_graph(4))
    assert K.f_vector() == [4, 6, 4, 1] and K.is_closed()


def test_homology_examples(C5):
    h = reduced_homology(independence_complex(complete_graph(3)))
    assert h.ranks == (2,)
    for field in (F2, Q):
        h = reduced_homology(independence_complex(C5), field)
        assert h.ranks == (0, 1)
        assert reduced_homology(independence_complex(empty_graph(5)), field).ranks == (0,) * 5
    void = reduced_homology(independence_complex(empty_graph(0)))
    assert void.rank_minus_one == 1 and void.top_nonzero() == -1


def test_augmentation_and_unknown_field():
    assert boundary_rank([0b1, 0b10], []) == 1
    with pytest.raises(ValueError):
        boundary_rank([0b11], [0b1, 0b10], field="z")


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_ranks_match_sympy(G):
    K = independence_complex(G)
    expected = oracles.reduced_betti_q(faces_of(K))
    for field in (F2, Q):
        h = reduced_homology(K, field)
        got = {d: r for d, r in enumerate(h.ranks)}
        for d, r in expected.items():
            if d >= 0:
                assert got.get(d, 0) == r
        # Euler-Poincare: reduced Euler characteristic from faces equals the alternating rank sum
        chi = sum((-1) ** d * f for d, f in enumerate(K.f_vector())) - 1
        assert h.euler_characteristic() == chi


def test_fields_differ_on_projective_plane():
    # the six-vertex triangulation of RP^2 has H~_1 = Z/2: visible over GF(2) only
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
            (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    top = {sum(1 << v for v in t) for t in tris}
    edges = {f & ~(1 << v) for f in top for v in members(f)}
    by_size = [[1 << v for v in range(6)], sorted(edges), sorted(top)]
    from edgeideal.homology import SimplicialComplex
    K = SimplicialComplex(6, tuple(tuple(x) for x in by_size))
    assert reduced_homology(K, F2).ranks == (0, 1, 1)
    assert reduced_homology(K, Q).ranks == (0, 0, 0)


def test_hochster_examples(C5):
    assert regularity_hochster(complete_graph(2)) == 1
    assert regularity_hochster(C5) == 2
    assert regularity_hochster(path_graph(5)) == 2
    assert regularity_hochster(empty_graph(3)) == 0
    with pytest.raises(SubsetScanTooLarge):
        regularity_hochster(path_graph(21))
    with pytest.raises(ValueError):
        regularity_hochster(C5, "z")


def test_named_regularities():
    assert regularity_hochster(build_case2_chordal(7, 3, 1)) == 3
    assert regularity_hochster(build_whisker(path_graph(4))) == 2
    assert regularity_hochster(build_cw_witness(7, 3, 1)) == 3


@pytest.mark.parametrize("n", range(2, 13))
def test_paths_and_cycles(n):
    assert regularity_hochster(path_graph(n)) == (n + 1) // 3
    if n >= 3:
        assert regularity_hochster(cycle_graph(n)) == n // 3 + (1 if n % 3 == 2 else 0)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_hochster_matches_unpruned_scan(G):
    assert regularity_hochster(G) == oracles.regularity_bruteforce(oracles.to_nx(G))


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_dispatch_matches_scan(G):
    r = regularity(G)
    assert r == regularity_hochster(G)
    assert induced_matching_number(G) <= r <= matching_number(G)


def test_routes():
    assert regularity_route(empty_graph(2)) == "edgeless"
    assert regularity_route(path_graph(4)) == "chordal"
    assert regularity_route(build_whisker(cycle_graph(4))) == "whisker"
    square_core = build_cw([(0, 2), (0, 3), (1, 2), (1, 3)], (1, 1), (0, 1))
    assert regularity_route(square_core) == "cameron_walker"
    assert regularity(square_core) == regularity_hochster(square_core) == 3
    assert regularity_route(cycle_graph(5)) == "hochster"


def test_induced_regularity_table():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 8)
        G = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])
        table = induced_regularity_table(G)
        for W in rng.sample(range(1 << n), min(20, 1 << n)):
            assert table[W] == regularity_hochster(induced_subgraph(G, W)[0])
