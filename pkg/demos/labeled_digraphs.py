"""
Recognising labeled Cayley digraphs
===================================

Edges carry labels drawn from the vertex set. The deterministic,
source-complete digraphs are exactly the labeled Cayley digraphs of magmas.
"""

from rackbench import fixtures
from rackbench.labeled import classify, induced_magma, labeled_cayley, parse_labeled_text

g = labeled_cayley(fixtures.kei_3(), range(3))
print(g.to_text())
print(sorted(classify(g).realizes))

# %%
# hand-written input, 1-based like the fixtures in data/
text = """
order 3
labels 1
1 --1--> 1
2 --1--> 3
3 --1--> 2
"""
h = parse_labeled_text(text, one_based=True)
rep = classify(h)
print(rep.in_Q, rep.first_rack_cond, rep.second_rack_cond, sorted(rep.realizes))
# the non-labels 2 and 3 act as the identity
print(induced_magma(h).right_mult)

# %%
# a right quasigroup that fails the first rack condition
bad = classify(labeled_cayley(fixtures.non_rack_3(), range(3)))
print(bad.first_rack_cond, "rack" in bad.realizes)
