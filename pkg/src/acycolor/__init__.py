"""Constructive acyclic edge coloring with max-degree+3 colors for graphs
whose every induced subgraph spans at most 2n-1 edges."""

from .coloring import BichromaticWalk, Palette, PartialColoring
from .configurations import Configuration, compute_charges, find_configuration
from .engine import EliminationTrace, TraceEntry, acyclic_edge_color, base_case_solver
from .errors import (
    AcycolorError,
    DuplicateEdge,
    EdgeAlreadyColored,
    ExtensionExhausted,
    ImproperExchange,
    MissingEdge,
    NoConfiguration,
    NotACandidate,
    NotPropertyA,
    ParseError,
    PartialInput,
    SearchBudgetExceeded,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
)
from .extension import extend_coloring
from .generators import (
    gen_2degenerate,
    gen_grid,
    gen_random_property_a,
    gen_two_forests,
)
from .graph import Graph, GraphMetrics, edge_key
from .sparsity import (
    PebbleState,
    SparsityVerdict,
    check_property_a,
    property_a_bruteforce,
)
from .verification import VerificationReport, exact_acyclic_chromatic_index, verify

__all__ = [
    "AcycolorError",
    "BichromaticWalk",
    "Configuration",
    "DuplicateEdge",
    "EdgeAlreadyColored",
    "EliminationTrace",
    "ExtensionExhausted",
    "Graph",
    "GraphMetrics",
    "ImproperExchange",
    "MissingEdge",
    "NoConfiguration",
    "NotACandidate",
    "NotPropertyA",
    "Palette",
    "ParseError",
    "PartialColoring",
    "PartialInput",
    "PebbleState",
    "SearchBudgetExceeded",
    "SelfLoop",
    "SparsityVerdict",
    "TooLarge",
    "TraceEntry",
    "VerificationReport",
    "VertexOutOfRange",
    "acyclic_edge_color",
    "base_case_solver",
    "check_property_a",
    "compute_charges",
    "edge_key",
    "exact_acyclic_chromatic_index",
    "extend_coloring",
    "find_configuration",
    "gen_2degenerate",
    "gen_grid",
    "gen_random_property_a",
    "gen_two_forests",
    "property_a_bruteforce",
    "verify",
]
