"""relcalc: finite relation algebra with machine-checked laws and SCCs."""

from .rel_core import (
    CarrierError,
    Relation,
    SizeMismatchError,
    bottom,
    complement,
    compose,
    converse,
    equals,
    heyting,
    identity,
    is_subset,
    join,
    meet,
    star,
    top,
)
from .laws import (
    LAWS,
    BudgetError,
    CheckConfig,
    Law,
    LawReport,
    Shape,
    check_instance,
    exhaustive_check,
    get_law,
    randomized_check,
)
from .scc import (
    CondensationDag,
    NotAnEquivalenceError,
    Partition,
    condense,
    equivalence_classes,
    is_equivalence,
    scc_equivalence,
    starth_root,
)
from .oracle import Graph, reachability_scc, star_by_powers, tarjan_scc
from .io_cli import (
    EdgeListError,
    cli_main,
    format_edge_list,
    graph_from_relation,
    parse_edge_list,
    relation_from_graph,
    to_dot,
)

__all__ = [
    "CarrierError",
    "Relation",
    "SizeMismatchError",
    "bottom",
    "complement",
    "compose",
    "converse",
    "equals",
    "heyting",
    "identity",
    "is_subset",
    "join",
    "meet",
    "star",
    "top",
    "LAWS",
    "BudgetError",
    "CheckConfig",
    "Law",
    "LawReport",
    "Shape",
    "check_instance",
    "exhaustive_check",
    "get_law",
    "randomized_check",
    "CondensationDag",
    "NotAnEquivalenceError",
    "Partition",
    "condense",
    "equivalence_classes",
    "is_equivalence",
    "scc_equivalence",
    "starth_root",
    "Graph",
    "reachability_scc",
    "star_by_powers",
    "tarjan_scc",
    "EdgeListError",
    "cli_main",
    "format_edge_list",
    "graph_from_relation",
    "parse_edge_list",
    "relation_from_graph",
    "to_dot",
]

__version__ = "0.1.0"
