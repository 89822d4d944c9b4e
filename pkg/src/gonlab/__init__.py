"""gonlab: a workbench for finite partial generalized n-gons.

Incidence graphs, the predimension delta_n, free completions, open and
closed subgraphs, amalgams, certified normal forms and witness gallery.
"""
from .amalgam import *  # noqa: F401,F403
from .completion import *  # noqa: F401,F403
from .gallery import *  # noqa: F401,F403
from .generators import cycle_graph, fano, path_graph, random_bipartite, random_hf_graph, single_edge
from .gonfile import *  # noqa: F401,F403
from .graph import (
    INFINITY, GraphError, IncidenceGraph, Part, Provenance, Verdict, bfs_distances, distance, find_embedding,
    geodesics, girth, is_connected, is_embedding, isomorphic, shortest_cycle, shortest_path,
)
from .normalize import *  # noqa: F401,F403
from .polygon import *  # noqa: F401,F403
from .rank import *  # noqa: F401,F403

__version__ = "0.1.0"
