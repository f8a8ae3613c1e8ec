"""
graphss - two-channel critically sampled graph filter banks

Sampling happens in the graph frequency domain, so perfect reconstruction
holds on any undirected graph, not only bipartite ones.
"""

from core import __version__

__all__ = ["__version__"]
