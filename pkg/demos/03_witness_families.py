# Graphs with a prescribed (reg, v) pair.
#
# build_rv_witness uses the tree construction when n - 2r >= r and the
# chordal one otherwise (whose output may still happen to be a tree).
# Whisker and Cameron-Walker witnesses have their own builders.
from edgeideal import build_cw_witness, build_rv_witness, build_whisker_witness, emit_graph6, v_number
from edgeideal.homology import regularity_hochster
from edgeideal.recognition import cw_decomposition, is_chordal, is_forest

for n, r, v in [(7, 2, 2), (9, 3, 1), (7, 3, 1), (8, 3, 2)]:
    G = build_rv_witness(n, r, v)
    kind = "tree" if is_forest(G) else "chordal" if is_chordal(G) else "other"
    got = (regularity_hochster(G), v_number(G).size)
    print(f"A-witness  n={n} target={(r, v)} got={got} {kind:<8} {emit_graph6(G)}")

for n, r, v in [(8, 2, 2), (8, 3, 1), (10, 3, 2)]:
    W = build_whisker_witness(n, r, v)
    got = (regularity_hochster(W), v_number(W).size)
    print(f"whisker    n={n} target={(r, v)} got={got} {emit_graph6(W)}")

for n, r, v in [(5, 2, 1), (7, 3, 1), (9, 3, 2)]:
    G = build_cw_witness(n, r, v)
    dec = cw_decomposition(G)
    print(f"CW         n={n} target={(r, v)} m={dec.m} p={dec.p} s={dec.s} t={dec.t} "
          f"reg=m+sum(t)={dec.regularity}")
