"""
Quandle markings of cycles
==========================

Every quandle marking of C_n comes from a subgroup of the dihedral group
generated by reflections, so there are sigma(n) + 1 of them.
"""

from rackbench.census import divisor_sigma, iter_markings, reflection_markings
from rackbench.graphs import cycle_graph
from rackbench.perm import reflection_subgroups

n = 6
subgroups = reflection_subgroups(n)
print(len(subgroups), "reflection subgroups of D_6, sigma(6) + 1 =", divisor_sigma(n) + 1)

# %%
for group, m in zip(subgroups, reflection_markings(n)):
    active = {v + 1: p.cycle_string() for v, p in enumerate(m.assignment) if not p.is_identity()}
    print(f"|H| = {group.order:2d}", active or "trivial")

# %%
# the same set falls out of the exhaustive search
found = {a for a, _ in iter_markings(cycle_graph(n), quandle_only=True)}
print(found == {m.assignment for m in reflection_markings(n)})
print([len(reflection_markings(k)) for k in range(3, 16)])
