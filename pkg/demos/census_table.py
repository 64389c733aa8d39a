"""
Counting rack and quandle markings
==================================

mu_rack (mu_qnd) counts functions V -> Aut G whose magma is a rack (quandle).
"""

import time

from rackbench.census import BudgetExceeded, mu_census, mu_qnd_path, mu_rack_path
from rackbench.cli import format_table1, table1_cells
from rackbench.graphs import complete_graph, cycle_graph, path_graph

res = mu_census(cycle_graph(5))
print(res.counts(), "out of", res.total_markings, "markings,", res.nodes, "search nodes")

# %%
# the whole table, columns n = 0..7; "?" marks cells left uncomputed
t0 = time.perf_counter()
print(format_table1(table1_cells({"complete": 4, "star": 5, "cycle": 7}, budget_seconds=60)))
print(f"{time.perf_counter() - t0:.2f}s")

# %%
# paths only have the reflection, so the counts follow closed forms
for n in range(2, 11):
    assert mu_census(path_graph(n)).counts() == (mu_rack_path(n), mu_qnd_path(n))
print("paths agree up to n = 10")

# %%
# a tight node budget stops the search and keeps the partial tallies
try:
    mu_census(complete_graph(5), max_nodes=2000)
except BudgetExceeded as exc:
    print(exc.reason, exc.partial.counts())
