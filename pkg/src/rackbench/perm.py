"""Permutations, explicitly enumerated permutation groups and dihedral reflections.

Permutations act on ``{0, ..., n-1}`` and are stored in one-line image form.
Composition ``p * q`` (and :func:`compose`) applies ``q`` first, then ``p``.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

DEFAULT_CAP = 10**6


class GroupTooLarge(RuntimeError):
    """Raised when a closure would exceed its element cap."""

    def __init__(self, cap: int):
        super().__init__(f"group too large: more than {cap} elements (cap={cap})")
        self.cap = cap


class Perm:
    """A bijection of ``{0, ..., n-1}``; ``images[w]`` is the image of ``w``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {list(images)}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int], one_based: bool = False) -> Perm:
        """Build a permutation of degree ``n`` from disjoint cycles.

        >>> Perm.from_cycles(3, (1, 2, 3), one_based=True).images
        (1, 2, 0)
        """
        images = list(range(n))
        seen: set[int] = set()
        shift = 1 if one_based else 0
        for cycle in cycles:
            cyc = [c - shift for c in cycle]
            if any(c < 0 or c >= n for c in cyc):
                raise ValueError(f"cycle {tuple(cycle)} out of range for degree {n}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, w: int) -> int:
        return self.images[w]

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __invert__(self) -> Perm:
        return inverse(self)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == w for w, i in enumerate(self.images))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(w for w, i in enumerate(self.images) if i == w)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            w = self.images[start]
            while w != start:
                cyc.append(w)
                seen.add(w)
                w = self.images[w]
            out.append(tuple(cyc))
        return out

    def cycle_string(self, one_based: bool = True) -> str:
        shift = 1 if one_based else 0
        cycs = self.cycles()
        if not cycs:
            return "id"
        return "".join("(" + " ".join(str(c + shift) for c in cyc) + ")" for cyc in cycs)

    def to_json(self) -> list[int]:
        return list(self.images)


def _check_degrees(p: Perm, q: Perm) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p q``: apply ``q`` first, then ``p``."""
    _check_degrees(p, q)
    pi = p.images
    return Perm(pi[i] for i in q.images)


def inverse(p: Perm) -> Perm:
    inv = [0] * p.degree
    for w, i in enumerate(p.images):
        inv[i] = w
    return Perm(inv)


def conjugate(g: Perm, h: Perm) -> Perm:
    """``g h g^{-1}``."""
    return compose(compose(g, h), inverse(g))


def closure(generators: Iterable[Perm], cap: int = DEFAULT_CAP, degree: int | None = None) -> frozenset[Perm]:
    """All elements of the group generated by ``generators``, by breadth-first multiplication.

    ``degree`` is needed only when ``generators`` is empty.
    """
    gens = list(dict.fromkeys(generators))
    degrees = {g.degree for g in gens}
    if len(degrees) > 1:
        raise ValueError(f"generators have mixed degrees {sorted(degrees)}")
    if gens:
        n = gens[0].degree
    elif degree is not None:
        n = degree
    else:
        raise ValueError("degree is required for an empty generating set")
    ident = Perm.identity(n)
    elements = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in elements:
                elements.add(y)
                if len(elements) > cap:
                    raise GroupTooLarge(cap)
                queue.append(y)
    return frozenset(elements)


class PermGroup:
    """A permutation group given by generators, with lazily enumerated elements."""

    def __init__(self, degree: int, generators: Iterable[Perm] = (), cap: int = DEFAULT_CAP,
                 elements: Iterable[Perm] | None = None):
        self.degree = degree
        self.generators = frozenset(generators)
        for g in self.generators:
            if g.degree != degree:
                raise ValueError(f"generator {g} does not have degree {degree}")
        self.cap = cap
        self._lock = threading.Lock()
        self._elements: tuple[Perm, ...] | None = None
        if elements is not None:
            els = sorted(set(elements))
            if any(e.degree != degree for e in els):
                raise ValueError(f"elements must have degree {degree}")
            self._elements = tuple(els)

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Perm]) -> PermGroup:
        els = list(elements)
        return cls(degree, els, elements=els)

    @property
    def elements(self) -> tuple[Perm, ...]:
        """Every element, sorted lexicographically by image sequence."""
        if self._elements is None:
            with self._lock:
                if self._elements is None:
                    els = closure(self.generators, self.cap, self.degree)
                    self._elements = tuple(sorted(els))
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, p: Perm) -> bool:
        return p in self.element_set

    @property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PermGroup) and self.degree == other.degree \
            and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "generators": [g.to_json() for g in sorted(self.generators)]}

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        return cls(int(data["degree"]), [Perm(g) for g in data["generators"]])


def symmetric_group(n: int) -> PermGroup:
    return PermGroup.from_elements(n, (Perm(p) for p in permutations(range(n))))


def cyclic_group(n: int) -> PermGroup:
    """Regular action of the cyclic group of order ``n`` on ``{0, ..., n-1}``."""
    if n < 1:
        raise ValueError("n must be positive")
    return PermGroup(n, [Perm((w + 1) % n for w in range(n))])


def dihedral_group(n: int) -> PermGroup:
    """Symmetries of the n-cycle: rotation ``w -> w+1`` and reflection ``w -> -w`` (mod n)."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    rot = Perm((w + 1) % n for w in range(n))
    ref = Perm((-w) % n for w in range(n))
    return PermGroup(n, [rot, ref])


@dataclass(frozen=True)
class Reflection:
    perm: Perm
    axis_vertices: frozenset[int]

    def __post_init__(self):
        if self.perm.is_identity() or not compose(self.perm, self.perm).is_identity():
            raise ValueError(f"{self.perm} is not a reflection")
        if self.perm.fixed_points() != self.axis_vertices:
            raise ValueError("axis_vertices must equal the fixed-point set")


def reflection_perm(n: int, k: int) -> Perm:
    """The reflection ``w -> (k - w) mod n``."""
    return Perm((k - w) % n for w in range(n))


def reflections(n: int) -> list[Reflection]:
    """The n reflections of the n-cycle, indexed by ``k`` in ``w -> (k - w) mod n``."""
    if n < 3:
        raise ValueError(f"reflections need n >= 3, got {n}")
    out = []
    for k in range(n):
        p = reflection_perm(n, k)
        out.append(Reflection(p, p.fixed_points()))
    return out


def reflection_subgroups(n: int, max_n: int = 60) -> list[PermGroup]:
    """Every subgroup of the dihedral group that is trivial or generated by reflections.

    Explores subgroups by adjoining one reflection at a time to already-found
    subgroups; this reaches every subset-generated subgroup without visiting
    all ``2**n`` subsets. Results are deduplicated by element set and sorted
    by (order, elements).
    """
    if n < 3:
        raise ValueError(f"reflection subgroups need n >= 3, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds max_n={max_n}")
    refl = [r.perm for r in reflections(n)]
    trivial = frozenset([Perm.identity(n)])
    found = {trivial: ()}
    frontier = [trivial]
    while frontier:
        nxt = []
        for els in frontier:
            gens = found[els]
            for r in refl:
                if r in els:
                    continue
                new = closure(gens + (r,))
                if new not in found:
                    found[new] = gens + (r,)
                    nxt.append(new)
        frontier = nxt
    groups = [PermGroup(n, gens, elements=els) for els, gens in found.items()]
    groups.sort(key=lambda g: (g.order, g.elements))
    return groups
