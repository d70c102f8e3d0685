"""Regularity and h-polynomial degree of edge ideals of small graphs."""

from .atlas import RdCensus, count_cw, lattice_A, lattice_B, lattice_CW, run_census
from .cameron_walker import decompose_cw, is_cameron_walker
from .constructions import CwSpec, build_cw, build_G_abc, realize_cw, realize_rd
from .graph import Graph, canonical_form, from_edge_list
from .invariants import betti_table, hilbert_data, rd_pair, regularity

__all__ = [
    "CwSpec", "Graph", "RdCensus", "betti_table", "build_G_abc", "build_cw",
    "canonical_form", "count_cw", "decompose_cw", "from_edge_list", "hilbert_data",
    "is_cameron_walker", "lattice_A", "lattice_B", "lattice_CW", "rd_pair",
    "realize_cw", "realize_rd", "regularity", "run_census",
]
__version__ = "0.1.0"
