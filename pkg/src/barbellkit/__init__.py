"""Barbell partitions, forts and zero forcing, graph operations, and SSP kernels."""

from .barbell import (
    BarbellCertificate,
    BarbellPartition,
    Method,
    Verdict,
    brute_force_barbell,
    find_barbell_partition,
    verify_barbell_partition,
)
from .forcing import extract_fort_within, is_fort, zero_forcing_closure
from .graph import Graph, VertexSet, encode_graph6, parse_graph6, read_graph

__version__ = "0.1.0"

__all__ = [
    "BarbellCertificate",
    "BarbellPartition",
    "Graph",
    "Method",
    "Verdict",
    "VertexSet",
    "brute_force_barbell",
    "encode_graph6",
    "extract_fort_within",
    "find_barbell_partition",
    "is_fort",
    "parse_graph6",
    "read_graph",
    "verify_barbell_partition",
    "zero_forcing_closure",
]
