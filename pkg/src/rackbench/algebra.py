"""Finite magmas and right quasigroups described by their right-multiplication maps.

A magma of order ``n`` is stored as rows ``right_mult[v][w] = R_v(w)``; the
binary operation is ``v ◁ w = R_w(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, Mapping, Sequence

from .perm import DEFAULT_CAP, Perm, PermGroup, compose, conjugate, inverse


@dataclass(frozen=True, eq=False)
class FiniteMagma:
    order: int
    right_mult: tuple[tuple[int, ...], ...]

    def __init__(self, right_mult: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in right_mult)
        n = len(rows)
        for v, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {v} has length {len(row)}, expected {n}")
            if any(x < 0 or x >= n for x in row):
                raise ValueError(f"row {v} has an entry outside 0..{n - 1}")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "right_mult", rows)

    def __eq__(self, other: object) -> bool:
        # structure-level equality: a right quasigroup equals the magma with the same rows
        return isinstance(other, FiniteMagma) and self.right_mult == other.right_mult

    def __hash__(self) -> int:
        return hash(self.right_mult)

    def R(self, v: int) -> tuple[int, ...]:
        return self.right_mult[v]

    def op(self, v: int, w: int) -> int:
        """``v ◁ w = R_w(v)``."""
        return self.right_mult[w][v]

    @classmethod
    def from_operation_table(cls, table: Sequence[Sequence[int]]):
        """From ``table[v][w] = v ◁ w``."""
        n = len(table)
        return cls([[table[w][v] for w in range(n)] for v in range(n)])

    def operation_table(self) -> list[list[int]]:
        n = self.order
        return [[self.op(v, w) for w in range(n)] for v in range(n)]

    def to_json(self) -> dict:
        return {"order": self.order, "right_mult": [list(r) for r in self.right_mult]}

    @classmethod
    def from_json(cls, data: Mapping):
        m = cls(data["right_mult"])
        if "order" in data and int(data["order"]) != m.order:
            raise ValueError(f"order {data['order']} does not match {m.order} rows")
        return m


class RightQuasigroup(FiniteMagma):
    """A magma whose right-multiplication maps are all permutations."""

    def __init__(self, right_mult: Sequence[Sequence[int]]):
        super().__init__(right_mult)
        for v, row in enumerate(self.right_mult):
            if len(set(row)) != self.order:
                raise ValueError(f"R_{v} is not a permutation")

    @classmethod
    def from_perms(cls, perms: Sequence[Perm]) -> RightQuasigroup:
        return cls([p.images for p in perms])

    def perms(self) -> list[Perm]:
        return [Perm(row) for row in self.right_mult]


def as_right_quasigroup(m: FiniteMagma) -> RightQuasigroup:
    if isinstance(m, RightQuasigroup):
        return m
    return RightQuasigroup(m.right_mult)


def is_right_cancellative(m: FiniteMagma) -> bool:
    return all(len(set(row)) == m.order for row in m.right_mult)


def is_right_divisible(m: FiniteMagma) -> bool:
    return all(set(row) == set(range(m.order)) for row in m.right_mult)


def is_right_quasigroup(m: FiniteMagma) -> bool:
    return is_right_cancellative(m) and is_right_divisible(m)


def _compose_rows(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(p[i] for i in q)


def is_rack(q: FiniteMagma) -> bool:
    """``R_v R_w = R_{R_v(w)} R_v`` for all ``v, w`` (right quasigroups only)."""
    if not is_right_quasigroup(q):
        return False
    R = q.right_mult
    for v in range(q.order):
        Rv = R[v]
        for w in range(q.order):
            if _compose_rows(Rv, R[w]) != _compose_rows(R[Rv[w]], Rv):
                return False
    return True


def is_quandle(q: FiniteMagma) -> bool:
    return is_rack(q) and all(row[v] == v for v, row in enumerate(q.right_mult))


def is_involutory(q: FiniteMagma) -> bool:
    return is_right_quasigroup(q) and all(
        row[row[w]] == w for row in q.right_mult for w in range(q.order))


def is_kei(q: FiniteMagma) -> bool:
    return is_quandle(q) and is_involutory(q)


def rmlt(q: RightQuasigroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """The right-multiplication group, generated by all ``R_v``."""
    q = as_right_quasigroup(q)
    g = PermGroup(q.order, q.perms(), cap=cap)
    g.elements  # noqa: B018 - force enumeration so the cap is enforced here
    return g


def conj_quandle(g: PermGroup) -> RightQuasigroup:
    """Conjugation quandle on the group elements, indexed in sorted image order."""
    els = g.elements
    index = {e: i for i, e in enumerate(els)}
    rows = [[index[conjugate(a, b)] for b in els] for a in els]
    return RightQuasigroup(rows)


def permutation_rack(n: int, sigma: Perm) -> RightQuasigroup:
    if sigma.degree != n:
        raise ValueError(f"sigma has degree {sigma.degree}, expected {n}")
    return RightQuasigroup([sigma.images] * n)


def trivial_quandle(n: int) -> RightQuasigroup:
    return permutation_rack(n, Perm.identity(n))


def _check_group_table(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise ValueError("group table must be a non-empty square table")
    if any(x < 0 or x >= n for row in table for x in row):
        raise ValueError("group table entry out of range")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not ids:
        raise ValueError("no identity element")
    e = ids[0]
    for a in range(n):
        if not any(table[a][b] == e == table[b][a] for b in range(n)):
            raise ValueError(f"element {a} has no inverse")
    return n


def regular_right_quasigroup(mul_table: Sequence[Sequence[int]]) -> RightQuasigroup:
    """Right regular action ``R_h(g) = g h`` of a group given by ``mul_table[g][h] = g h``."""
    n = _check_group_table(mul_table)
    return RightQuasigroup([[mul_table[g][h] for g in range(n)] for h in range(n)])


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def is_magma_hom(phi: Sequence[int] | Mapping[int, int], src: FiniteMagma, dst: FiniteMagma) -> bool:
    """Whether ``phi R_v = T_{phi(v)} phi`` for all ``v``."""
    f = [phi[v] for v in range(src.order)]
    if any(x < 0 or x >= dst.order for x in f):
        raise ValueError("phi has values outside the target magma")
    T = dst.right_mult
    for v, row in enumerate(src.right_mult):
        Tv = T[f[v]]
        for w in range(src.order):
            if f[row[w]] != Tv[f[w]]:
                return False
    return True


def rack_via_hom(q: FiniteMagma) -> bool:
    """Rack test through ``R: V -> Conj S_V``: ``R_{R_v(w)} = R_v R_w R_v^{-1}`` pointwise."""
    if not is_right_quasigroup(q):
        return False
    P = [Perm(row) for row in q.right_mult]
    for v in range(q.order):
        for w in range(q.order):
            if P[P[v](w)] != conjugate(P[v], P[w]):
                return False
    return True


def closed_under_conjugation(q: RightQuasigroup, allow_inverses: bool = False) -> bool:
    P = as_right_quasigroup(q).perms()
    allowed = set(P)
    if allow_inverses:
        allowed |= {inverse(p) for p in P}
    return all(conjugate(a, b) in allowed for a in P for b in P)


MAX_ENUM_SPACE = 331776


def enumerate_right_quasigroups(n: int) -> Iterator[RightQuasigroup]:
    """All ``(n!)**n`` labeled right quasigroups of order ``n``, rows in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if factorial(n) ** n > MAX_ENUM_SPACE:
        raise ValueError(f"order {n} too large to enumerate: (n!)^n > {MAX_ENUM_SPACE}")
    rows = list(permutations(range(n)))
    for choice in product(rows, repeat=n):
        yield RightQuasigroup(choice)


def enumerate_magmas(n: int) -> Iterator[FiniteMagma]:
    """All ``n**(n*n)`` labeled magmas of order ``n``."""
    if n ** (n * n) > MAX_ENUM_SPACE:
        raise ValueError(f"order {n} too large to enumerate")
    rows = list(product(range(n), repeat=n))
    for choice in product(rows, repeat=n):
        yield FiniteMagma(choice)


def random_right_quasigroup(n: int, rng) -> RightQuasigroup:
    """``rng`` is a :class:`random.Random`."""
    rows = []
    for _ in range(n):
        row = list(range(n))
        rng.shuffle(row)
        rows.append(row)
    return RightQuasigroup(rows)
