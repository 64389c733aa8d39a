"""Counting markings of a (di)graph that realize racks and quandles.

The search assigns ``R_0, R_1, ...`` in vertex order from the automorphism
group and, after each assignment, tests every rack identity
``R_a R_b = R_{R_a(b)} R_a`` whose three vertices are already assigned.
A violated identity stays violated, so the subtree is cut.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graphs import AnyGraph, cycle_graph, automorphism_group
from .cayley import Marking
from .perm import Perm, reflection_perm, reflection_subgroups

DEFAULT_BUDGET_SECONDS = 600.0


def default_budget_seconds() -> float:
    return float(os.environ.get("RACKBENCH_BUDGET_SECONDS", DEFAULT_BUDGET_SECONDS))


class BudgetExceeded(RuntimeError):
    """The census ran out of time or nodes; ``partial`` holds the counts reached so far."""

    def __init__(self, reason: str, partial: CensusResult):
        super().__init__(f"census budget exceeded ({reason}); partial: {partial}")
        self.reason = reason
        self.partial = partial


@dataclass(frozen=True)
class CensusResult:
    mu_rack: int
    mu_qnd: int
    total_markings: int
    elapsed: float = field(default=0.0, compare=False)
    nodes: int = field(default=0, compare=False)

    def counts(self) -> tuple[int, int]:
        return (self.mu_rack, self.mu_qnd)

    def to_json(self) -> dict:
        return {"mu_rack": self.mu_rack, "mu_qnd": self.mu_qnd,
                "total_markings": self.total_markings,
                "elapsed_ms": round(self.elapsed * 1000, 3)}


@dataclass(frozen=True)
class _Tables:
    """Automorphism group as index tables: ``img[x][w]``, ``pre[x][w]``, ``mul[x][y]`` (x after y)."""

    n: int
    img: tuple[tuple[int, ...], ...]
    pre: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, elements: Sequence[Perm], n: int) -> _Tables:
        index = {p: i for i, p in enumerate(elements)}
        img = tuple(p.images for p in elements)
        pre = []
        for p in elements:
            inv = [0] * n
            for w, i in enumerate(p.images):
                inv[i] = w
            pre.append(tuple(inv))
        mul = tuple(tuple(index[Perm(a[i] for i in b)] for b in img) for a in img)
        return cls(n, img, tuple(pre), mul)


class _Counter:
    def __init__(self, max_nodes, deadline):
        self.nodes = 0
        self.racks = 0
        self.quandles = 0
        self.max_nodes = max_nodes
        self.deadline = deadline

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _Stop("node limit")
        if self.deadline is not None and (self.nodes & 0xFFF) == 0 and time.monotonic() > self.deadline:
            raise _Stop("time limit")


class _Stop(Exception):
    pass


def _consistent(t: _Tables, x: list[int], k: int) -> bool:
    """All rack identities among vertices ``0..k`` that involve ``k``."""
    img, pre, mul = t.img, t.pre, t.mul
    xk = x[k]
    ik = img[xk]
    for b in range(k + 1):
        # a = k
        c = ik[b]
        if c <= k and mul[xk][x[b]] != mul[x[c]][xk]:
            return False
    for a in range(k):
        xa = x[a]
        ia = img[xa]
        # b = k
        c = ia[k]
        if c <= k and mul[xa][xk] != mul[x[c]][xa]:
            return False
        # R_a(b) = k with a, b < k
        b = pre[xa][k]
        if b < k and mul[xa][x[b]] != mul[xk][xa]:
            return False
    return True


def _is_rack_assignment(t: _Tables, x: list[int]) -> bool:
    img, mul = t.img, t.mul
    return all(mul[x[a]][x[b]] == mul[x[img[x[a]][b]]][x[a]]
               for a in range(t.n) for b in range(t.n))


def _dfs(t: _Tables, candidates: Sequence[Sequence[int]], counter: _Counter, prune: bool,
         x: list[int], k: int, fixed: bool, sink=None) -> None:
    n = t.n
    for g in candidates[k]:
        counter.tick()
        x[k] = g
        if prune and not _consistent(t, x, k):
            continue
        fk = fixed and t.img[g][k] == k
        if k + 1 == n:
            if not prune and not _is_rack_assignment(t, x):
                continue
            counter.racks += 1
            if fk:
                counter.quandles += 1
            if sink is not None:
                sink(tuple(x), fk)
        else:
            _dfs(t, candidates, counter, prune, x, k + 1, fk, sink)


def _run(t: _Tables, candidates, prune: bool, max_nodes, deadline, sink=None):
    counter = _Counter(max_nodes, deadline)
    if t.n == 0:
        counter.racks = counter.quandles = 1
        return counter, None
    try:
        _dfs(t, candidates, counter, prune, [0] * t.n, 0, True, sink)
    except _Stop as stop:
        return counter, str(stop)
    return counter, None


def _worker(args):
    t, candidates, prune, max_nodes, budget = args
    deadline = None if budget is None else time.monotonic() + budget
    counter, stopped = _run(t, candidates, prune, max_nodes, deadline)
    return counter.nodes, counter.racks, counter.quandles, stopped


def _prepare(g: AnyGraph, quandle_only: bool):
    elements = automorphism_group(g).elements
    t = _Tables.build(elements, g.order)
    if quandle_only:
        candidates = [[i for i, p in enumerate(elements) if p.images[v] == v] for v in range(g.order)]
    else:
        candidates = [list(range(len(elements)))] * g.order
    return elements, t, candidates


def _census(g: AnyGraph, quandle_only: bool, budget_seconds, max_nodes, jobs, prune) -> CensusResult:
    if budget_seconds is None:
        budget_seconds = default_budget_seconds()
    start = time.monotonic()
    elements, t, candidates = _prepare(g, quandle_only)
    total = len(elements) ** g.order

    if jobs > 1 and g.order > 1:
        tasks = [(t, [[c]] + candidates[1:], prune, max_nodes, budget_seconds) for c in candidates[0]]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_worker, tasks))
        nodes = sum(p[0] for p in parts)
        racks = sum(p[1] for p in parts)
        quandles = sum(p[2] for p in parts)
        stopped = next((p[3] for p in parts if p[3]), None)
    else:
        deadline = start + budget_seconds if budget_seconds is not None else None
        counter, stopped = _run(t, candidates, prune, max_nodes, deadline)
        nodes, racks, quandles = counter.nodes, counter.racks, counter.quandles

    elapsed = time.monotonic() - start
    if quandle_only:
        racks = quandles
    result = CensusResult(racks, quandles, total, elapsed, nodes)
    if stopped:
        raise BudgetExceeded(stopped, result)
    return result


def mu_census(g: AnyGraph, budget_seconds: float | None = None, max_nodes: int | None = None,
              jobs: int = 1, prune: bool = True) -> CensusResult:
    """Exact ``(mu_rack, mu_qnd)``: markings ``V -> Aut g`` that realize racks and quandles.

    Counts are of labeled markings. ``jobs > 1`` splits the search over the
    choices of ``R_0``; the budget then applies per worker. Raises
    :class:`BudgetExceeded` with the partial counts when a limit is hit.
    """
    return _census(g, False, budget_seconds, max_nodes, jobs, prune)


def quandle_census(g: AnyGraph, budget_seconds: float | None = None, max_nodes: int | None = None,
                   jobs: int = 1) -> int:
    """``mu_qnd`` alone, searching only q-markings (each ``R_v`` fixes ``v``)."""
    return _census(g, True, budget_seconds, max_nodes, jobs, True).mu_qnd


def iter_markings(g: AnyGraph, quandle_only: bool = False) -> Iterator[tuple[tuple[Perm, ...], bool]]:
    """Yield ``(assignment, is_quandle)`` for every rack-realizing marking of ``g``.

    With ``quandle_only`` only q-markings are searched, so every yield is a quandle.
    """
    elements, t, candidates = _prepare(g, quandle_only)
    found = []
    _run(t, candidates, True, None, None,
         sink=lambda x, q: found.append((tuple(elements[i] for i in x), q)))
    if g.order == 0:
        found.append(((), True))
    yield from found


def mu_rack_path(n: int) -> int:
    if n < 2:
        raise ValueError(f"path graph needs n >= 2, got {n}")
    k = n // 2
    return 2 ** k if n % 2 == 0 else 2 ** (k + 1)


def mu_qnd_path(n: int) -> int:
    if n < 2:
        raise ValueError(f"path graph needs n >= 2, got {n}")
    return 1 if n % 2 == 0 else 2


def divisor_sigma(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
        d += 1
    return total


def mu_qnd_cycle(n: int) -> int:
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return divisor_sigma(n) + 1


def _reflection_coset(group_elements, n: int) -> tuple[int, int] | None:
    """``(d, r)`` such that the reflections of the group are ``w -> c - w`` for ``c ≡ r (mod d)``."""
    cs = sorted(c for c in range(n) if reflection_perm(n, c) in group_elements)
    if not cs:
        return None
    d = n
    for c in cs:
        d = _gcd(d, c - cs[0])
    return d, cs[0] % d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def reflection_markings(n: int) -> list[Marking]:
    """One quandle-realizing marking of the n-cycle per reflection subgroup of its dihedral group.

    A nontrivial reflection subgroup has reflections ``w -> c - w`` with ``c``
    running over a coset ``r + dZ``. It is sent to the marking whose active
    vertices form the coset ``a + dZ``, each carrying the reflection fixing
    it (``w -> 2v - w``); every other vertex gets the identity. For odd ``d``,
    ``a = r / 2 (mod d)``, which is exactly the vertex-on-the-axis rule. For
    even ``d`` that rule is not injective (reflections fixing no vertex exist),
    so ``a = r``. Both choices biject residues mod ``d``, and the cosets of
    subgroups of ``Z/n`` are exactly the active sets of quandle markings.
    """
    graph = cycle_graph(n)
    ident = Perm.identity(n)
    out = []
    for group in reflection_subgroups(n):
        coset = _reflection_coset(group.element_set, n)
        if coset is None:
            out.append(Marking(graph, (ident,) * n))
            continue
        d, r = coset
        a = r * pow(2, -1, d) % d if d % 2 else r
        assignment = tuple(reflection_perm(n, 2 * v) if v % d == a else ident for v in range(n))
        out.append(Marking(graph, assignment))
    return out
