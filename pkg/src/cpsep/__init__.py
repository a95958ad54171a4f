"""Connectivity-preserving important separators and node multiway cut-uncut."""

from .constraints import ConstraintSpec, evaluate, is_cp_separator
from .enumeration import EnumContext, EnumStats, gen_seps, min_cp_important_separators
from .errors import ContractViolation, CpsepError, InvalidInput, NoSeparator, ResourceLimit
from .flow import (
    BACKEND,
    closest_min_separator_to_sink,
    closest_min_separator_to_source,
    kappa,
    min_separator,
)
from .graph import Graph, load_graph, parse_graph
from .instances import NmwcuInstance, NmwcuSolution
from .nmwcu import close_separators, solve
from .separators import certify, is_important, is_minimal_separator, is_separator, minimalize

__all__ = [
    "BACKEND",
    "ConstraintSpec",
    "ContractViolation",
    "CpsepError",
    "EnumContext",
    "EnumStats",
    "Graph",
    "InvalidInput",
    "NmwcuInstance",
    "NmwcuSolution",
    "NoSeparator",
    "ResourceLimit",
    "certify",
    "close_separators",
    "closest_min_separator_to_sink",
    "closest_min_separator_to_source",
    "evaluate",
    "gen_seps",
    "is_cp_separator",
    "is_important",
    "is_minimal_separator",
    "is_separator",
    "kappa",
    "load_graph",
    "min_cp_important_separators",
    "min_separator",
    "minimalize",
    "parse_graph",
    "solve",
]
