"""Finite simple graphs, digraphs with loops, standard families and automorphism groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .perm import DEFAULT_CAP, GroupTooLarge, Perm, PermGroup


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges are stored as sorted pairs ``(u, v)`` with ``u < v``."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, order: int, edges: Iterable[Iterable[int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        es = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {(u, v)} out of range for order {order}")
            es.add((min(u, v), max(u, v)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(es))

    directed = False

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def arcs(self) -> frozenset[tuple[int, int]]:
        """Both orientations of every edge."""
        return self.edges | {(v, u) for u, v in self.edges}

    def to_json(self) -> dict:
        return {"kind": "graph", "order": self.order, "edges": [list(e) for e in sorted(self.edges)]}


@dataclass(frozen=True)
class Digraph:
    """Digraph with loops allowed and no parallel edges."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, order: int, edges: Iterable[Iterable[int]] = ()):
        if order < 0:
            raise ValueError("order must be non-negative")
        es = set()
        for e in edges:
            u, v = e
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge {(u, v)} out of range for order {order}")
            es.add((u, v))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(es))

    directed = True

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def arcs(self) -> frozenset[tuple[int, int]]:
        return self.edges

    def to_json(self) -> dict:
        return {"kind": "digraph", "order": self.order, "edges": [list(e) for e in sorted(self.edges)]}


AnyGraph = Union[Graph, Digraph]


def graph_from_json(data: Mapping) -> AnyGraph:
    kind = data.get("kind", "graph")
    if kind not in ("graph", "digraph"):
        raise ValueError(f"unknown graph kind {kind!r}")
    order = int(data["order"])
    edges = [tuple(e) for e in data.get("edges", [])]
    if any(len(e) != 2 for e in edges):
        raise ValueError("edges must be pairs")
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edges")
    cls = Graph if kind == "graph" else Digraph
    return cls(order, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(n_leaves: int) -> Graph:
    """``K_{1, n_leaves}`` centred at vertex 0. ``n_leaves = 0`` gives a single vertex."""
    if n_leaves < 0:
        raise ValueError("star graph needs n_leaves >= 0")
    return Graph(n_leaves + 1, ((0, v) for v in range(1, n_leaves + 1)))


def path_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"path graph needs n >= 2, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle graph needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_digraph(n: int, with_loops: bool = False) -> Digraph:
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if with_loops or u != v))


FAMILIES = {
    "complete": complete_graph,
    "edgeless": edgeless_graph,
    "star": lambda n: star_graph(n - 1),
    "path": path_graph,
    "cycle": cycle_graph,
}


def family_graph(name: str, n: int) -> Graph:
    """Named family by total order ``n`` (``star`` gives ``K_{1, n-1}``)."""
    try:
        return FAMILIES[name](n)
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


def underlying_graph(d: Digraph) -> Graph:
    return Graph(d.order, ((u, v) for u, v in d.edges if u != v))


def complement(g: Graph) -> Graph:
    return Graph(g.order, ((u, v) for u in range(g.order) for v in range(u + 1, g.order)
                           if (u, v) not in g.edges))


def is_automorphism(g: AnyGraph, p: Perm) -> bool:
    if p.degree != g.order:
        raise ValueError(f"permutation degree {p.degree} != graph order {g.order}")
    im = p.images
    arcs = g.arcs()
    return all((im[u], im[v]) in arcs for u, v in arcs)


def _adjacency(g: AnyGraph) -> list[list[bool]]:
    n = g.order
    adj = [[False] * n for _ in range(n)]
    for u, v in g.arcs():
        adj[u][v] = True
    return adj


def vertex_colors(g: AnyGraph) -> list[int]:
    """Stable colouring from (loop, out-degree, in-degree) refined by neighbour colour multisets."""
    n = g.order
    adj = _adjacency(g)
    outs = [[v for v in range(n) if adj[u][v] and v != u] for u in range(n)]
    ins = [[v for v in range(n) if adj[v][u] and v != u] for u in range(n)]
    keys = [(adj[u][u], len(outs[u]), len(ins[u])) for u in range(n)]
    colors = _relabel(keys)
    while True:
        keys = [(colors[u], tuple(sorted(colors[v] for v in outs[u])),
                 tuple(sorted(colors[v] for v in ins[u]))) for u in range(n)]
        new = _relabel(keys)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _relabel(keys: list) -> list[int]:
    table = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [table[k] for k in keys]


def _search_automorphisms(g: AnyGraph, cap: int) -> list[Perm]:
    n = g.order
    if n == 0:
        return [Perm(())]
    adj = _adjacency(g)
    colors = vertex_colors(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)

    # Vertices in small colour classes first, then prefer neighbours of already placed ones.
    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        placed = set(order)

        def key(v):
            linked = sum(1 for u in placed if adj[u][v] or adj[v][u])
            return (len(classes[colors[v]]), -linked, v)
        v = min(remaining, key=key)
        order.append(v)
        remaining.discard(v)

    image = [-1] * n
    used = [False] * n
    found: list[Perm] = []

    def extend(depth: int) -> None:
        if depth == n:
            found.append(Perm(image))
            if len(found) > cap:
                raise GroupTooLarge(cap)
            return
        v = order[depth]
        row_v = adj[v]
        for x in classes[colors[v]]:
            if used[x] or adj[x][x] != row_v[v]:
                continue
            row_x = adj[x]
            ok = True
            for i in range(depth):
                u = order[i]
                y = image[u]
                if row_v[u] != row_x[y] or adj[u][v] != adj[y][x]:
                    ok = False
                    break
            if ok:
                image[v] = x
                used[x] = True
                extend(depth + 1)
                used[x] = False
        image[v] = -1

    extend(0)
    return found


@lru_cache(maxsize=256)
def _cached_automorphisms(g: AnyGraph, cap: int) -> tuple[Perm, ...]:
    return tuple(sorted(_search_automorphisms(g, cap)))


def automorphism_group(g: AnyGraph, cap: int = DEFAULT_CAP) -> PermGroup:
    """Full automorphism group as an explicit element set, by pruned backtracking."""
    return PermGroup.from_elements(g.order, _cached_automorphisms(g, cap))
