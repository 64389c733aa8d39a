"""
Racks, quandles and marked Cayley graphs
========================================

A finite magma is stored as a list of right multiplications R_v.
"""

from rackbench import fixtures
from rackbench.algebra import is_kei, is_quandle, is_rack, rmlt
from rackbench.cayley import Marking, cayley_digraph, cayley_graph, is_marking
from rackbench.graphs import automorphism_group

# the dihedral kei on three points: R_1 = (2 3), R_2 = (1 3), R_3 = (1 2)
q = fixtures.kei_3()
for v, p in enumerate(q.perms(), start=1):
    print(f"R_{v} = {p.cycle_string()}")
print("rack:", is_rack(q), " quandle:", is_quandle(q), " kei:", is_kei(q))
print("|RMlt| =", rmlt(q).order)

# %%
# Cayley digraph with connection set {1}: an edge v -> R_s(v) for each s
partial = cayley_digraph(q, [0])
print(sorted(partial.edges))
# R is not a marking here, but it is on the full Cayley digraph
print(is_marking(Marking(partial, q.perms())),
      is_marking(Marking(cayley_digraph(q, range(3)), q.perms())))

# %%
# a right quasigroup that is not a rack can still carry automorphisms
square = fixtures.square_4()
full = cayley_digraph(square, range(4))
print("rack:", is_rack(square))
print("|Aut| digraph =", automorphism_group(full).order,
      " graph =", automorphism_group(cayley_graph(square, range(4))).order)
print("marks digraph:", is_marking(Marking(full, square.perms())),
      " marks graph:", is_marking(Marking(cayley_graph(square, range(4)), square.perms())))
