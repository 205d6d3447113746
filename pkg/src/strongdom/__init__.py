"""Exact strong domination numbers, composition operators and bound verification."""

__version__ = "0.1.0"

from .graph import (CapacityError, Graph, GraphError, ParseError, complete, cycle, empty,
                    emit_edge_list, mask_of, members, parse_edge_list, path, star)
from .solver import (SolveResult, gamma, gamma_oracle, gamma_st, gamma_st_oracle, is_dominating,
                     is_strong_dominating)
from .compose import (ComposedGraph, CompositionSpec, GluingSpec, chain, circuit, disjoint_union,
                      enumerate_r_gluings, link, r_glue, vertex_sum)
from .instance import Instance, load_instance

__all__ = [
    "__version__",
    "Graph", "GraphError", "ParseError", "CapacityError",
    "path", "cycle", "complete", "star", "empty", "mask_of", "members",
    "parse_edge_list", "emit_edge_list",
    "SolveResult", "is_dominating", "is_strong_dominating",
    "gamma_st", "gamma_st_oracle", "gamma", "gamma_oracle",
    "GluingSpec", "CompositionSpec", "ComposedGraph",
    "disjoint_union", "vertex_sum", "r_glue", "chain", "link", "circuit", "enumerate_r_gluings",
    "Instance", "load_instance",
]
