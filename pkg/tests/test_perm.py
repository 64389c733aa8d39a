from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rackbench.census import divisor_sigma
from rackbench.perm import (
    GroupTooLarge,
    Perm,
    PermGroup,
    Reflection,
    closure,
    compose,
    conjugate,
    dihedral_group,
    inverse,
    reflection_subgroups,
    reflections,
)


def c(n, *cycles):
    return Perm.from_cycles(n, *cycles, one_based=True)


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 8))
    return Perm(draw(st.permutations(range(n))))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 7))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


def test_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm([0, 0, 1])


def test_from_cycles_one_based():
    assert c(3, (1, 2, 3)).images == (1, 2, 0)
    assert c(4, (1, 3), (2, 4)).images == (2, 3, 0, 1)


def test_compose_identity_and_involution():
    p = c(4, (1, 2, 4))
    assert compose(Perm.identity(4), p) == p
    assert compose(c(3, (1, 2)), c(3, (1, 2))).is_identity()


def test_compose_applies_right_operand_first():
    p, q = c(3, (1, 3)), c(3, (2, 3))
    # image chase: q then p
    expected = []
    for w in range(3):
        expected.append(p.images[q.images[w]])
    assert compose(p, q).images == tuple(expected)
    # 1 -> 1 -> 3, 2 -> 3 -> 1, 3 -> 2 -> 2
    assert compose(p, q) == c(3, (1, 3, 2))


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Perm.identity(2), Perm.identity(3))


def test_inverse_examples():
    assert inverse(Perm.identity(3)).is_identity()
    assert inverse(c(3, (1, 2, 3))) == c(3, (1, 3, 2))


@given(perms())
def test_inverse_property(p):
    assert compose(inverse(p), p).is_identity()
    assert compose(p, inverse(p)).is_identity()


@given(perm_triples())
def test_compose_associative(t):
    p, q, r = t
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perm_triples())
def test_conjugate_preserves_involutions(t):
    g, h, _ = t
    k = conjugate(g, h)
    assert compose(k, k).is_identity() == compose(h, h).is_identity()


def test_conjugate_examples():
    h = c(3, (1, 2))
    assert conjugate(Perm.identity(3), h) == h
    assert conjugate(c(3, (1, 3)), c(3, (2, 3))) == c(3, (1, 2))
    assert conjugate(c(4, (1, 2, 3, 4)), c(4, (2, 4))) == c(4, (1, 3))


def test_closure_examples():
    assert closure([], degree=4) == {Perm.identity(4)}
    assert len(closure([c(3, (1, 2, 3))], 10)) == 3
    assert len(closure([c(5, (3, 4, 5)), c(5, (1, 2))], 100)) == 6


def test_closure_cap():
    with pytest.raises(GroupTooLarge, match="cap=10"):
        closure([c(5, (1, 2)), c(5, (1, 2, 3, 4, 5))], 10)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)),
       st.data())
def test_lagrange(gens, data):
    n = gens[0].degree
    extra = data.draw(perms(n))
    small = closure(gens)
    big = closure(gens + [extra])
    assert len(big) % len(small) == 0
    assert small <= big


def test_closure_group_axioms():
    els = closure([c(4, (1, 2)), c(4, (1, 2, 3, 4))])
    assert len(els) == 24
    assert all(compose(a, b) in els for a in els for b in els)
    assert all(inverse(a) in els for a in els)


@pytest.mark.parametrize("n", [3, 4, 6, 9])
def test_dihedral_order(n):
    assert dihedral_group(n).order == 2 * n


def test_dihedral_contains_axis_reflection():
    assert Perm([2, 1, 0, 3]) in dihedral_group(4)


def test_dihedral_too_small():
    with pytest.raises(ValueError):
        dihedral_group(2)


def test_reflections_odd_and_even():
    r3 = reflections(3)
    assert len(r3) == 3 and all(len(r.axis_vertices) == 1 for r in r3)
    sizes = sorted(len(r.axis_vertices) for r in reflections(4))
    assert sizes == [0, 0, 2, 2]


def test_reflections_five_fixed_points():
    # oracle: solve (k - w) % 5 == w by scanning
    expected = {frozenset(w for w in range(5) if (k - w) % 5 == w) for k in range(5)}
    assert {r.axis_vertices for r in reflections(5)} == expected
    assert expected == {frozenset([v]) for v in range(5)}


def test_reflection_validation():
    with pytest.raises(ValueError):
        Reflection(Perm.identity(3), frozenset(range(3)))


def _naive_subgroups(n):
    """Close every subset of reflections by repeated products of tuples."""
    refl = [tuple((k - w) % n for w in range(n)) for k in range(n)]
    ident = tuple(range(n))
    found = {frozenset([ident])}
    for r in range(1, n + 1):
        for subset in combinations(refl, r):
            els = {ident, *subset}
            while True:
                new = {tuple(a[i] for i in b) for a in els for b in els} | els
                if new == els:
                    break
                els = new
            found.add(frozenset(els))
    return found


@pytest.mark.parametrize("n,expected", [(3, 5), (4, 8), (5, 7), (6, 13)])
def test_reflection_subgroup_counts(n, expected):
    groups = reflection_subgroups(n)
    assert len(groups) == expected
    assert {frozenset(p.images for p in g.elements) for g in groups} == _naive_subgroups(n)


def test_reflection_subgroup_count_matches_sigma():
    for n in range(3, 31):
        assert len(reflection_subgroups(n)) == divisor_sigma(n) + 1


def test_permgroup_json_roundtrip():
    g = dihedral_group(5)
    h = PermGroup.from_json(g.to_json())
    assert h == g and h.order == 10
