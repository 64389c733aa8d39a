"""Labeled digraphs whose labels are vertices, and recognition of labeled Cayley digraphs.

An edge ``(v, l, w)`` is a transition ``v --l--> w`` with ``l`` in the label set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .algebra import FiniteMagma


class NotInClass(ValueError):
    """A labeled digraph lacks the determinism/completeness an operation requires."""


@dataclass(frozen=True)
class LabeledDigraph:
    order: int
    labels: frozenset[int]
    edges: frozenset[tuple[int, int, int]]

    def __init__(self, order: int, labels: Iterable[int], edges: Iterable[Iterable[int]]):
        labels = frozenset(int(x) for x in labels)
        es = [tuple(int(c) for c in e) for e in edges]
        if any(len(e) != 3 for e in es):
            raise ValueError("edges must be (source, label, target) triples")
        if len(set(es)) != len(es):
            dup = next(e for e in es if es.count(e) > 1)
            raise ValueError(f"duplicate edge {dup}")
        if any(x < 0 or x >= order for x in labels):
            raise ValueError("labels must be vertices")
        for v, l, w in es:
            if not (0 <= v < order and 0 <= w < order):
                raise ValueError(f"edge {(v, l, w)} out of range for order {order}")
            if l not in labels:
                raise ValueError(f"edge {(v, l, w)} uses label {l} outside the label set")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", frozenset(es))

    def to_json(self) -> dict:
        return {"order": self.order, "labels": sorted(self.labels),
                "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: Mapping) -> LabeledDigraph:
        return cls(int(data["order"]), data["labels"], data["edges"])

    def to_text(self) -> str:
        lines = [f"order {self.order}", "labels " + " ".join(map(str, sorted(self.labels)))]
        lines += [f"{v} --{l}--> {w}" for v, l, w in sorted(self.edges)]
        return "\n".join(lines) + "\n"


_EDGE_RE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*-->\s*(\d+)\s*$")


def parse_labeled_text(text: str, one_based: bool = False) -> LabeledDigraph:
    """Parse lines ``v --l--> w``, with optional ``order N`` and ``labels a b ...`` lines.

    Blank lines and ``#`` comments are ignored. Missing ``order`` defaults to
    one more than the largest index; missing ``labels`` to the labels in use.
    """
    shift = 1 if one_based else 0
    order = None
    labels = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "order":
            order = int(rest)
        elif head == "labels":
            labels = [int(x) - shift for x in rest.split()]
        else:
            m = _EDGE_RE.match(line)
            if not m:
                raise ValueError(f"line {lineno}: cannot parse {raw!r}")
            edges.append(tuple(int(x) - shift for x in m.groups()))
    if labels is None:
        labels = sorted({l for _, l, _ in edges})
    if order is None:
        order = 1 + max([x for e in edges for x in e] + list(labels), default=-1)
    return LabeledDigraph(order, labels, edges)


def _projection_counts(g: LabeledDigraph, first: bool) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for v, l, w in g.edges:
        key = (v, l) if first else (l, w)
        counts[key] = counts.get(key, 0) + 1
    return counts


def is_deterministic(g: LabeledDigraph) -> bool:
    return all(c == 1 for c in _projection_counts(g, True).values())


def is_codeterministic(g: LabeledDigraph) -> bool:
    return all(c == 1 for c in _projection_counts(g, False).values())


def is_source_complete(g: LabeledDigraph) -> bool:
    return len(_projection_counts(g, True)) == g.order * len(g.labels)


def is_target_complete(g: LabeledDigraph) -> bool:
    return len(_projection_counts(g, False)) == g.order * len(g.labels)


def in_class_D(g: LabeledDigraph) -> bool:
    return is_deterministic(g) and is_source_complete(g)


def in_class_Q(g: LabeledDigraph) -> bool:
    return in_class_D(g) and is_codeterministic(g) and is_target_complete(g)


def labeled_cayley(q: FiniteMagma, s: Iterable[int]) -> LabeledDigraph:
    S = sorted(set(s))
    R = q.right_mult
    return LabeledDigraph(q.order, S, [(v, t, R[t][v]) for v in range(q.order) for t in S])


def induced_magma(g: LabeledDigraph) -> FiniteMagma:
    """The magma read off a deterministic, source-complete labeled digraph.

    ``R_l(v) = w`` for the unique edge ``(v, l, w)``; non-label vertices get the
    identity. Rows of non-labels are not recoverable, so this inverts
    :func:`labeled_cayley` only when the label set is every vertex.
    """
    n = g.order
    succ = {}
    for v, l, w in sorted(g.edges):
        if (v, l) in succ:
            raise NotInClass(f"not deterministic: vertex {v} has two edges labeled {l}")
        succ[v, l] = w
    rows = []
    for l in range(n):
        if l not in g.labels:
            rows.append(list(range(n)))
            continue
        row = []
        for v in range(n):
            if (v, l) not in succ:
                raise NotInClass(f"not source-complete: vertex {v} has no edge labeled {l}")
            row.append(succ[v, l])
        rows.append(row)
    return FiniteMagma(rows)


def _require_Q(g: LabeledDigraph) -> FiniteMagma:
    m = induced_magma(g)
    if not is_codeterministic(g):
        raise NotInClass("not codeterministic")
    if not is_target_complete(g):
        raise NotInClass("not target-complete")
    return m


def first_rack_condition(g: LabeledDigraph) -> bool:
    """``R_{l1}(w2) = R_{R_{l1}(l2)}(w1)`` for every pair of edges ``(v, l1, w1), (v, l2, w2)``."""
    R = _require_Q(g).right_mult
    out: dict[int, list[tuple[int, int]]] = {}
    for v, l, w in g.edges:
        out.setdefault(v, []).append((l, w))
    for pairs in out.values():
        for l1, w1 in pairs:
            for l2, w2 in pairs:
                if R[l1][w2] != R[R[l1][l2]][w1]:
                    return False
    return True


def second_rack_condition(g: LabeledDigraph) -> bool:
    """Each edge ``(v, l, w)`` and non-label ``x`` with ``R_l(x)`` a label gives a loop ``(w, R_l(x), w)``."""
    R = _require_Q(g).right_mult
    non_labels = [x for x in range(g.order) if x not in g.labels]
    for v, l, w in g.edges:
        for x in non_labels:
            y = R[l][x]
            if y in g.labels and (w, y, w) not in g.edges:
                return False
    return True


def is_label_idempotent(g: LabeledDigraph) -> bool:
    return all((l, l, l) in g.edges for l in g.labels)


def is_label_involutory(g: LabeledDigraph) -> bool:
    """Every edge ``(v, l, w)`` has its reverse ``(w, l, v)``: loops and 2-cycles per label."""
    return all((w, l, v) in g.edges for v, l, w in g.edges)


VERDICTS = (
    "right-cancellative magma",
    "right-divisible magma",
    "right quasigroup",
    "involutory right quasigroup",
    "rack",
    "involutory rack",
    "quandle",
    "kei",
)


@dataclass(frozen=True)
class ClassReport:
    deterministic: bool
    codeterministic: bool
    source_complete: bool
    target_complete: bool
    in_D: bool
    in_Q: bool
    first_rack_cond: bool
    second_rack_cond: bool
    label_idempotent: bool
    label_involutory: bool
    realizes: frozenset[str]
    reasons: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        out = {k: getattr(self, k) for k in (
            "deterministic", "codeterministic", "source_complete", "target_complete",
            "in_D", "in_Q", "first_rack_cond", "second_rack_cond",
            "label_idempotent", "label_involutory")}
        out["realizes"] = [v for v in VERDICTS if v in self.realizes]
        out["reasons"] = list(self.reasons)
        return out


def classify(g: LabeledDigraph) -> ClassReport:
    """Which kind of magma, if any, has ``g`` as its labeled Cayley digraph."""
    det, codet = is_deterministic(g), is_codeterministic(g)
    src, tgt = is_source_complete(g), is_target_complete(g)
    in_D = det and src
    in_Q = in_D and codet and tgt
    idem, invol = is_label_idempotent(g), is_label_involutory(g)
    reasons = []
    if in_Q:
        first, second = first_rack_condition(g), second_rack_condition(g)
    else:
        first = second = False
        missing = [name for name, ok in (("deterministic", det), ("source-complete", src),
                                         ("codeterministic", codet), ("target-complete", tgt)) if not ok]
        reasons.append("rack conditions not evaluated: not in Q (not " + ", ".join(missing) + ")")

    realizes = set()
    if in_D and codet:
        realizes.add("right-cancellative magma")
    if in_D and tgt:
        realizes.add("right-divisible magma")
    if in_Q:
        realizes.add("right quasigroup")
        if invol:
            realizes.add("involutory right quasigroup")
        if first and second:
            realizes.add("rack")
            if idem:
                realizes.add("quandle")
            if invol:
                realizes.add("involutory rack")
                if idem:
                    realizes.add("kei")
    return ClassReport(det, codet, src, tgt, in_D, in_Q, first, second, idem, invol,
                       frozenset(realizes), tuple(reasons))
