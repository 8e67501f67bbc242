"""Topological coding toolkit: graph colorings, star systems, graphic
groups, topological matrices and graphic lattices."""

from . import colorings, core, groups, iceflower, lattice, topcode
from .core import ColoredGraph, Graph, GraphError

__version__ = "0.1.0"

__all__ = ["ColoredGraph", "Graph", "GraphError", "colorings", "core",
           "groups", "iceflower", "lattice", "topcode", "__version__"]
