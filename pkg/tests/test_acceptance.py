"""The numbered acceptance criteria, one marker per criterion.

``pytest tests/test_acceptance.py`` ends with a PASS/FAIL line per criterion.
"""

import random
import time
from itertools import combinations

import pytest

from rackbench.algebra import (
    enumerate_magmas,
    enumerate_right_quasigroups,
    is_involutory,
    is_kei,
    is_quandle,
    is_rack,
    is_right_quasigroup,
    permutation_rack,
    rack_via_hom,
    random_right_quasigroup,
    rmlt,
)
from rackbench.cayley import (
    Marking,
    cayley_digraph,
    cayley_graph,
    conj_closure_condition,
    is_marking,
    is_q_marking,
    marking_condition_digraph,
    marking_condition_graph,
)
from rackbench.census import divisor_sigma, iter_markings, mu_census, quandle_census, reflection_markings
from rackbench.fixtures import kei_3, non_rack_3, quandle_5, square_4, twisted_3
from rackbench.graphs import (
    automorphism_group,
    complete_digraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    is_automorphism,
    path_graph,
    star_graph,
)
from rackbench.labeled import LabeledDigraph, classify, induced_magma, labeled_cayley
from rackbench.perm import Perm, closure, conjugate

pytestmark = pytest.mark.acceptance

P = lambda n, *cycles: Perm.from_cycles(n, *cycles, one_based=True)

# ---------------------------------------------------------------- 1: marking census table

TABLE_K = {0: (1, 1), 1: (1, 1), 2: (2, 1), 3: (13, 5), 4: (114, 36)}
TABLE_STAR = {1: (1, 1), 2: (2, 1), 3: (4, 2), 4: (31, 13), 5: (390, 114)}
TABLE_C = {3: (13, 5), 4: (32, 8), 5: (41, 7), 6: (108, 13), 7: (113, 9)}
SUITE_LIMIT_SECONDS = 600


@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", sorted(TABLE_K))
def test_table1_complete(n):
    assert mu_census(complete_graph(n)).counts() == TABLE_K[n]


@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", sorted(TABLE_STAR))
def test_table1_star(n):
    assert mu_census(star_graph(n - 1)).counts() == TABLE_STAR[n]


@pytest.mark.criterion(1)
@pytest.mark.parametrize("n", sorted(TABLE_C))
def test_table1_cycle(n):
    assert mu_census(cycle_graph(n)).counts() == TABLE_C[n]


@pytest.mark.criterion(1)
def test_table1_runtime():
    start = time.perf_counter()
    for n in TABLE_K:
        mu_census(complete_graph(n))
    for n in TABLE_STAR:
        mu_census(star_graph(n - 1))
    for n in TABLE_C:
        mu_census(cycle_graph(n))
    assert time.perf_counter() - start <= SUITE_LIMIT_SECONDS


# ---------------------------------------------------------------- 2: paths


@pytest.mark.criterion(2)
@pytest.mark.parametrize("n", range(2, 11))
def test_path_closed_form(n):
    k = n // 2
    expected = (2 ** k, 1) if n % 2 == 0 else (2 ** (k + 1), 2)
    res = mu_census(path_graph(n))
    assert res.counts() == expected
    assert res.total_markings == 2 ** n


# ---------------------------------------------------------------- 3: cycles


def sigma(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_mu_qnd(n):
    assert mu_census(cycle_graph(n)).mu_qnd == sigma(n) + 1


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_quandle_census(n):
    assert quandle_census(cycle_graph(n)) == sigma(n) + 1


@pytest.mark.criterion(3)
def test_reflection_markings_count_and_validity():
    for n in range(3, 31):
        ms = reflection_markings(n)
        assert len(ms) == sigma(n) + 1 == divisor_sigma(n) + 1
        assert len({m.assignment for m in ms}) == len(ms)
        for m in ms:
            assert m.graph == cycle_graph(n)
            assert is_q_marking(m)
            assert is_quandle(m.right_quasigroup())


@pytest.mark.criterion(3)
@pytest.mark.parametrize("n", range(3, 8))
def test_reflection_markings_equal_census_quandles(n):
    found = {a for a, q in iter_markings(cycle_graph(n)) if q}
    assert found == {m.assignment for m in reflection_markings(n)}


# ---------------------------------------------------------------- 4: racks on a 3-set


@pytest.mark.criterion(4)
def test_rack_count_order_3():
    qs = list(enumerate_right_quasigroups(3))
    assert len(qs) == 216
    assert sum(map(is_rack, qs)) == 13
    assert sum(map(is_quandle, qs)) == 5
    assert automorphism_group(complete_graph(3)).order == 6


# ---------------------------------------------------------------- 5: worked examples


@pytest.mark.criterion(5)
def test_example_not():
    q = non_rack_3()
    assert is_right_quasigroup(q) and not is_rack(q)
    assert conjugate(P(3, (1, 3)), P(3, (2, 3))) == P(3, (1, 2))
    assert not rack_via_hom(q)
    assert not conj_closure_condition(q, range(3))
    d, g = cayley_digraph(q, range(3)), cayley_graph(q, range(3))
    assert not is_marking(Marking(d, q.perms()))
    assert not is_marking(Marking(g, q.perms()))
    assert is_automorphism(d, P(3, (1, 2))) and not is_automorphism(d, P(3, (2, 3)))
    assert [p for p in automorphism_group(d).elements if not p.is_identity()] == [P(3, (1, 2))]
    rep = classify(labeled_cayley(q, range(3)))
    assert "right quasigroup" in rep.realizes and "rack" not in rep.realizes
    assert not rep.first_rack_cond


@pytest.mark.criterion(5)
def test_example_3quandle():
    q = kei_3()
    assert is_rack(q) and is_quandle(q) and is_involutory(q) and is_kei(q)
    assert rack_via_hom(q)
    assert rmlt(q).order == 6
    partial = cayley_digraph(q, [0])
    assert partial.edges == {(0, 0), (1, 2), (2, 1)}
    assert not is_marking(Marking(partial, q.perms()))
    assert not marking_condition_digraph(q, [0])
    assert not marking_condition_graph(q, [0])
    assert not is_marking(Marking(cayley_graph(q, [0]), q.perms()))
    assert is_marking(Marking(cayley_digraph(q, range(3)), q.perms()))
    assert marking_condition_digraph(q, range(3))
    assert cayley_graph(q, range(3)) == complete_graph(3)
    assert cayley_digraph(q, range(3)) == complete_digraph(3, True)
    rep = classify(labeled_cayley(q, range(3)))
    assert {"kei", "quandle", "involutory rack", "rack", "right quasigroup"} <= rep.realizes


@pytest.mark.criterion(5)
def test_example_different():
    v_r, v_123 = twisted_3(), permutation_rack(3, P(3, (1, 2, 3)))
    assert is_right_quasigroup(v_r) and not is_rack(v_r)
    assert is_rack(v_123) and not is_quandle(v_123) and not is_involutory(v_123)
    assert cayley_digraph(v_r, range(3)) == cayley_digraph(kei_3(), range(3))
    assert cayley_graph(v_r, range(3)) == cayley_graph(v_123, range(3))
    assert cayley_digraph(v_r, range(3)) == complete_digraph(3, True)
    rep = classify(labeled_cayley(v_123, range(3)))
    assert "rack" in rep.realizes and "quandle" not in rep.realizes
    assert not rep.label_involutory and not rep.label_idempotent


@pytest.mark.criterion(5)
def test_example_conj_holding_claims():
    q = square_4()
    assert conjugate(P(4, (1, 2, 3, 4)), P(4, (2, 4))) == P(4, (1, 3))
    assert not is_rack(q)
    assert not conj_closure_condition(q, range(4), undirected=True)
    assert rmlt(q).order == 8
    assert cayley_graph(q, range(4)) == complete_graph(4)
    assert is_marking(Marking(cayley_graph(q, range(4)), q.perms()))


@pytest.mark.criterion(5)
def test_example_conj_full_digraph_claims():
    # R marks the full Cayley digraph and RMlt equals its automorphism group (order 8)
    q = square_4()
    gamma = cayley_digraph(q, range(4))
    assert is_marking(Marking(gamma, q.perms()))
    assert rmlt(q).order == automorphism_group(gamma).order == 8
    assert rmlt(q) == automorphism_group(gamma)


@pytest.mark.criterion(5)
def test_example_5quandle_graph_claims():
    q = quandle_5()
    assert is_quandle(q)
    d, g = cayley_digraph(q, [0]), cayley_graph(q, [0])
    aut_d, aut_g = automorphism_group(d), automorphism_group(g)
    assert aut_d.order == 6
    assert aut_d.element_set == closure([P(5, (3, 4, 5)), P(5, (1, 2))], 100, degree=5)
    assert aut_g.order == 12
    assert not is_marking(Marking(d, q.perms()))
    assert is_marking(Marking(g, q.perms()))
    assert marking_condition_graph(q, [0]) and not marking_condition_digraph(q, [0])


@pytest.mark.criterion(5)
def test_example_5quandle_rmlt():
    # RMlt is S_3 x Z/2 and coincides with the automorphism group of the underlying graph
    q = quandle_5()
    assert rmlt(q).order == 12
    assert rmlt(q) == automorphism_group(cayley_graph(q, [0]))


# ---------------------------------------------------------------- 6: oracle equivalences


def _subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


@pytest.mark.criterion(6)
def test_marking_conditions_exhaustive_order_3():
    for q in enumerate_right_quasigroups(3):
        for s in _subsets(3):
            assert marking_condition_digraph(q, s) == is_marking(Marking(cayley_digraph(q, s), q.perms()))
            assert marking_condition_graph(q, s) == is_marking(Marking(cayley_graph(q, s), q.perms()))


@pytest.mark.criterion(6)
def test_marking_conditions_random_order_4_5():
    rng = random.Random(20240)
    for _ in range(200):
        n = rng.choice((4, 5))
        q = random_right_quasigroup(n, rng)
        s = [x for x in range(n) if rng.random() < 0.5]
        assert marking_condition_digraph(q, s) == is_marking(Marking(cayley_digraph(q, s), q.perms()))
        assert marking_condition_graph(q, s) == is_marking(Marking(cayley_graph(q, s), q.perms()))


@pytest.mark.criterion(6)
def test_rack_via_hom_equivalence():
    for q in enumerate_right_quasigroups(3):
        assert is_rack(q) == rack_via_hom(q)
    rng = random.Random(77)
    for _ in range(1000):
        q = random_right_quasigroup(rng.randint(1, 6), rng)
        assert is_rack(q) == rack_via_hom(q)


@pytest.mark.criterion(6)
def test_classify_equivalence_order_3():
    for q in enumerate_right_quasigroups(3):
        got = classify(labeled_cayley(q, range(3))).realizes
        assert ("rack" in got) == is_rack(q)
        assert ("quandle" in got) == is_quandle(q)
        assert ("involutory right quasigroup" in got) == is_involutory(q)
        assert ("kei" in got) == is_kei(q)
    for n in (1, 2):
        for q in enumerate_magmas(n):
            assert ("right quasigroup" in classify(labeled_cayley(q, range(n))).realizes) == is_right_quasigroup(q)


@pytest.mark.criterion(6)
def test_labeled_round_trip():
    rng = random.Random(500)
    for _ in range(500):
        n = rng.randint(1, 4)
        labels = [x for x in range(n) if rng.random() < 0.6]
        g = LabeledDigraph(n, labels, [(v, l, rng.randrange(n)) for v in range(n) for l in labels])
        assert labeled_cayley(induced_magma(g), labels) == g
    for n in (1, 2):
        for q in enumerate_magmas(n):
            assert induced_magma(labeled_cayley(q, range(n))) == q


# ---------------------------------------------------------------- 7: structural invariants


@pytest.mark.criterion(7)
@pytest.mark.parametrize("n", range(1, 8))
def test_automorphism_orders(n):
    from math import factorial
    assert automorphism_group(complete_graph(n)).order == factorial(n)
    if n >= 3:
        assert automorphism_group(star_graph(n - 1)).order == factorial(n - 1)
        assert automorphism_group(cycle_graph(n)).order == 2 * n
    if n >= 2:
        assert automorphism_group(path_graph(n)).order == 2


@pytest.mark.criterion(7)
@pytest.mark.parametrize("g", [complete_graph(4), star_graph(4), cycle_graph(6), path_graph(6),
                               edgeless_graph(3)], ids=str)
def test_total_markings_and_jobs(g):
    one = mu_census(g, jobs=1)
    assert one.total_markings == automorphism_group(g).order ** g.order
    assert mu_census(g, jobs=2) == one
    assert mu_census(g, jobs=4) == one
