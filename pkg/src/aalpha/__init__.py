"""A_alpha spectra of simple graphs and numerical verification of eigenvalue bounds."""

from aalpha.graph import Graph, StructureProfile, from_edges, structure_profile
from aalpha.graph6 import parse_edge_list, parse_graph6, write_graph6
from aalpha.invariants import InvariantSet, compute_invariants
from aalpha.spectra import AlphaMatrix, Spectrum, build_a_alpha, sym_eigenvalues
from aalpha.bounds import BoundReport, evaluate_all

__all__ = [
    "AlphaMatrix",
    "BoundReport",
    "Graph",
    "InvariantSet",
    "Spectrum",
    "StructureProfile",
    "build_a_alpha",
    "compute_invariants",
    "evaluate_all",
    "from_edges",
    "parse_edge_list",
    "parse_graph6",
    "structure_profile",
    "sym_eigenvalues",
    "write_graph6",
]

__version__ = "0.1.0"
