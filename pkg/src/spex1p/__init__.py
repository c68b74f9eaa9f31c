"""Spectral extremal problems for 1-planar graphs: constructions, spectra,
1-planarity certificates and brute-force checks at small n."""

from .graph import Graph, GraphError, from_edge_list, join
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .spectral import SpectralResult, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "SpectralResult",
    "from_edge_list",
    "graph6_decode",
    "graph6_encode",
    "join",
    "spectral_radius",
]
