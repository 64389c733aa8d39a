"""Racks, quandles and their Cayley graphs: markings, rack/quandle censuses and labeled Cayley digraphs."""

from .algebra import (
    FiniteMagma,
    RightQuasigroup,
    closed_under_conjugation,
    conj_quandle,
    enumerate_right_quasigroups,
    is_involutory,
    is_kei,
    is_magma_hom,
    is_quandle,
    is_rack,
    is_right_cancellative,
    is_right_divisible,
    is_right_quasigroup,
    permutation_rack,
    rack_via_hom,
    regular_right_quasigroup,
    rmlt,
    trivial_quandle,
)
from .cayley import (
    Marking,
    cayley_digraph,
    cayley_graph,
    conj_closure_condition,
    is_marking,
    is_q_marking,
    marking_condition_digraph,
    marking_condition_graph,
    schreier_digraph,
    schreier_graph,
)
from .census import (
    BudgetExceeded,
    CensusResult,
    divisor_sigma,
    mu_census,
    mu_qnd_cycle,
    mu_qnd_path,
    mu_rack_path,
    quandle_census,
    reflection_markings,
)
from .graphs import (
    Digraph,
    Graph,
    automorphism_group,
    complete_digraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    is_automorphism,
    path_graph,
    star_graph,
    underlying_graph,
)
from .labeled import ClassReport, LabeledDigraph, classify, induced_magma, labeled_cayley
from .perm import (
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

__version__ = "0.1.0"
