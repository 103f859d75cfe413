# Regularity from reduced homology of independence complexes.
#
# For C5 the whole vertex set already carries the top class: Ind(C5) is
# another 5-cycle, so H~_1 is one-dimensional and reg = 2.
from edgeideal.graph import cycle_graph, path_graph
from edgeideal.homology import (
    F2, Q, independence_complex, reduced_homology, regularity, regularity_hochster, regularity_route,
)

K = independence_complex(cycle_graph(5))
print("Ind(C5) f-vector:", K.f_vector())
print("reduced Betti numbers over GF(2):", reduced_homology(K, F2).ranks)

print()
print(" n  reg(P_n)  reg(C_n)  route for C_n")
for n in range(3, 13):
    print(f"{n:2d}  {regularity_hochster(path_graph(n)):8d}  {regularity_hochster(cycle_graph(n)):8d}  "
          f"{regularity_route(cycle_graph(n))}")

# The scan can run over Q instead of GF(2); for graphs this small the two agree.
C8 = cycle_graph(8)
print()
print("reg(C8) over GF(2):", regularity(C8, F2), " over Q:", regularity(C8, Q))
