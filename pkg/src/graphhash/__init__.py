"""Graph identification by MD5 neighborhood hashing."""

from .coder import VertexCoder, build_root, graph_hash, hash_graph, md5_digest, vertex_codes
from .graph import Edge, Graph, GraphError, Vertex, complete_digraph, random_graph, scramble
from .iso import (
    IsoResult,
    OracleCapExceeded,
    brute_force_isomorphic,
    hash_constrained_isomorphic,
    ullmann_isomorphic,
    verify_isomorphism,
)

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "IsoResult",
    "OracleCapExceeded",
    "Vertex",
    "VertexCoder",
    "brute_force_isomorphic",
    "build_root",
    "complete_digraph",
    "graph_hash",
    "hash_constrained_isomorphic",
    "hash_graph",
    "md5_digest",
    "random_graph",
    "scramble",
    "ullmann_isomorphic",
    "verify_isomorphism",
    "vertex_codes",
]
