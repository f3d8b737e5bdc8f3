"""Exact solvers for cycle and odd-cycle analogues of the domination chain."""
from .errors import InputError, ResourceError
from .graph import Graph, parse_edge_list, parse_graph6, to_graph6

__all__ = ["Graph", "InputError", "ResourceError", "parse_edge_list", "parse_graph6", "to_graph6"]
