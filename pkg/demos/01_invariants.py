# Invariants of a few small graphs.
#
# Each graph gets its independence, matching, induced matching and edge
# domination numbers, its v-number (with a witness) and the regularity of
# its edge ideal.
from edgeideal import from_edges, invariant_record, v_number
from edgeideal.graph import cycle_graph, path_graph
from edgeideal.graph import members

samples = {
    "P4": path_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    # a triangle with a pendant edge on each corner ("net")
    "net": from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
}

print(f"{'graph':<6} {'alpha':>5} {'m':>3} {'im':>3} {'ge':>3} {'v':>3} {'reg':>4}  witness")
for name, G in samples.items():
    rec = invariant_record(G)
    w = v_number(G)
    print(f"{name:<6} {rec.alpha:>5} {rec.matching:>3} {rec.induced_matching:>3} "
          f"{rec.edge_domination:>3} {rec.v_number:>3} {rec.regularity:>4}  "
          f"A={members(w.A)} N(A)={members(w.cover)}")

# Every row satisfies im <= reg <= m and v <= gamma_e; the acceptance suite
# checks those bounds on every connected graph up to 8 vertices.
