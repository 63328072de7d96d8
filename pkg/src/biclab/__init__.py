"""biclab: biclique partitions of graphs and of random graphs.

Exact solvers for alpha, beta, tau, tau' and gamma_max, constructive
decompositions, log-space moment numerics for G(n, 1/2), and a seeded
Monte Carlo harness.
"""

from .blocks import BipartiteBlock, Decomposition, SparseCover, validate_decomposition, validate_sparse_cover
from .graph import GnpParams, Graph, gnp_sample, induced_subgraph, parse_graph, serialize_graph

__all__ = [
    "BipartiteBlock", "Decomposition", "SparseCover", "validate_decomposition", "validate_sparse_cover",
    "GnpParams", "Graph", "gnp_sample", "induced_subgraph", "parse_graph", "serialize_graph",
]
__version__ = "0.1.0"
