"""Chordless cycles of cyclically orientable graphs."""

from .biconnected import Component, biconnected_components
from .graph import Graph, ParseError, canonicalize, format_graph, is_chordless_cycle, parse_graph, read_graph
from .reducer import NotCOReason, Verdict, check_edge_bound, enumerate_chordless_cycles, reduce_component

__all__ = [
    "Component",
    "Graph",
    "NotCOReason",
    "ParseError",
    "Verdict",
    "biconnected_components",
    "canonicalize",
    "check_edge_bound",
    "enumerate_chordless_cycles",
    "format_graph",
    "is_chordless_cycle",
    "parse_graph",
    "read_graph",
    "reduce_component",
]

__version__ = "0.1.0"
