"""JSON and text readers for the command line and fixture files."""

from __future__ import annotations

import json
from typing import Any

from .algebra import FiniteMagma, RightQuasigroup, is_right_quasigroup
from .graphs import AnyGraph, graph_from_json
from .labeled import LabeledDigraph, parse_labeled_text
from .perm import Perm, PermGroup


def load_json_text(text: str) -> Any:
    return json.loads(text)


def magma_from_json(data) -> FiniteMagma:
    """Magma JSON ``{"order": n, "right_mult": [[...], ...]}``; returns a right quasigroup when it is one."""
    m = FiniteMagma.from_json(data)
    return RightQuasigroup(m.right_mult) if is_right_quasigroup(m) else m


def labeled_from_text(text: str, one_based: bool = False) -> LabeledDigraph:
    """JSON object if the text starts with ``{``, otherwise the ``v --l--> w`` line form.

    ``one_based`` applies to the line form only; JSON is always 0-based.
    """
    if text.lstrip().startswith("{"):
        return LabeledDigraph.from_json(json.loads(text))
    return parse_labeled_text(text, one_based=one_based)


def graph_from_text(text: str) -> AnyGraph:
    return graph_from_json(json.loads(text))


def perm_from_json(data) -> Perm:
    return Perm(data)


def group_from_json(data) -> PermGroup:
    return PermGroup.from_json(data)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)
