"""Certify-or-refute Hamilton paths for claw-o_{-1}-heavy graphs."""

from .generators import (
    BULL, C3, CLAW, NET, P3, P4, WOUNDED, Z1, CompleteBipartite, CompleteN, PathN, PatternId, ZN,
    complete_bipartite, complete_graph, cycle_graph, enumerate_connected, gen_g1, gen_g2,
    gen_pattern, path_graph, petersen_graph, random_connected,
)
from .graph import Graph, build_graph, connectivity, parse_edgelist, parse_graph6, write_graph6
from .heavy import classify, check_H_o_heavy, e_tilde, embedding_o_heavy
from .patterns import Embedding, enumerate_induced, find_free_violation

__version__ = "0.1.0"

__all__ = [
    "BULL",
    "C3",
    "CLAW",
    "CompleteBipartite",
    "CompleteN",
    "Embedding",
    "Graph",
    "NET",
    "P3",
    "P4",
    "PathN",
    "PatternId",
    "WOUNDED",
    "Z1",
    "ZN",
    "build_graph",
    "check_H_o_heavy",
    "classify",
    "complete_bipartite",
    "complete_graph",
    "connectivity",
    "cycle_graph",
    "e_tilde",
    "embedding_o_heavy",
    "enumerate_connected",
    "enumerate_induced",
    "find_free_violation",
    "gen_g1",
    "gen_g2",
    "gen_pattern",
    "parse_edgelist",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "random_connected",
    "write_graph6",
]
