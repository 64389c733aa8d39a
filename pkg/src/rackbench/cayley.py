"""Cayley and Schreier (di)graphs, markings, and the conditions under which ``R`` marks a Cayley (di)graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import FiniteMagma, RightQuasigroup, as_right_quasigroup
from .graphs import AnyGraph, Digraph, Graph, automorphism_group, underlying_graph
from .perm import Perm, conjugate, inverse


def _subset(s: Iterable[int], n: int) -> list[int]:
    out = sorted(set(int(x) for x in s))
    if any(x < 0 or x >= n for x in out):
        raise ValueError(f"connection set {out} not contained in 0..{n - 1}")
    return out


@dataclass(frozen=True)
class Marking:
    graph: AnyGraph
    assignment: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.graph.order:
            raise ValueError("marking must assign a permutation to every vertex")
        for p in self.assignment:
            if p.degree != self.graph.order:
                raise ValueError(f"{p} has degree {p.degree}, graph order is {self.graph.order}")

    def right_quasigroup(self) -> RightQuasigroup:
        """The right quasigroup realized by this marking."""
        return RightQuasigroup.from_perms(self.assignment)


def cayley_digraph(q: FiniteMagma, s: Iterable[int]) -> Digraph:
    R = q.right_mult
    return Digraph(q.order, ((v, R[t][v]) for v in range(q.order) for t in _subset(s, q.order)))


def cayley_graph(q: FiniteMagma, s: Iterable[int]) -> Graph:
    return underlying_graph(cayley_digraph(q, s))


def _check_action(group_elements: Sequence[Perm], t: Sequence[Perm]) -> int:
    degrees = {p.degree for p in list(group_elements) + list(t)}
    if len(degrees) > 1:
        raise ValueError(f"degree mismatch among acting elements: {sorted(degrees)}")
    if not degrees:
        raise ValueError("cannot infer the acted-on set from no elements")
    return degrees.pop()


def schreier_digraph(group_elements: Sequence[Perm], t: Sequence[Perm]) -> Digraph:
    n = _check_action(group_elements, t)
    return Digraph(n, ((v, x(v)) for v in range(n) for x in t))


def schreier_graph(group_elements: Sequence[Perm], t: Sequence[Perm]) -> Graph:
    return underlying_graph(schreier_digraph(group_elements, t))


def is_marking(m: Marking) -> bool:
    aut = automorphism_group(m.graph)
    return all(p in aut for p in m.assignment)


def is_q_marking(m: Marking) -> bool:
    return is_marking(m) and all(p(v) == v for v, p in enumerate(m.assignment))


def marking_condition_digraph(q: RightQuasigroup, s: Iterable[int]) -> bool:
    """For all ``h, v`` and ``s'`` in ``s`` some ``t`` in ``s`` has ``R_t R_h (v) = R_h R_s' (v)``."""
    R = as_right_quasigroup(q).right_mult
    S = _subset(s, q.order)
    for h in range(q.order):
        Rh = R[h]
        for v in range(q.order):
            x = Rh[v]
            targets = {R[t][x] for t in S}
            if any(Rh[R[s_][v]] not in targets for s_ in S):
                return False
    return True


def marking_condition_graph(q: RightQuasigroup, s: Iterable[int]) -> bool:
    """As :func:`marking_condition_digraph`, also accepting ``R_h(v) = R_t R_h R_s'(v)``.

    Instances with ``R_s'(v) = v`` are skipped: they would be loops, which the
    underlying simple graph does not have.
    """
    R = as_right_quasigroup(q).right_mult
    S = _subset(s, q.order)
    for h in range(q.order):
        Rh = R[h]
        for v in range(q.order):
            x = Rh[v]
            for s_ in S:
                if R[s_][v] == v:
                    continue
                y = Rh[R[s_][v]]
                if not any(R[t][x] == y or R[t][y] == x for t in S):
                    return False
    return True


def conj_closure_condition(q: RightQuasigroup, s: Iterable[int], undirected: bool = False) -> bool:
    """Conjugating ``R(S)`` by ``R(V)`` lands in ``R(S)`` (or ``R(S) ∪ R(S)^{-1}``)."""
    P = as_right_quasigroup(q).perms()
    RS = {P[x] for x in _subset(s, q.order)}
    allowed = RS | {inverse(p) for p in RS} if undirected else RS
    return all(conjugate(g, h) in allowed for g in P for h in RS)
