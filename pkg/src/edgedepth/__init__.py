"""Depth and projective dimension of powers of edge ideals of graphs.

Closed forms live in :mod:`edgedepth.formulas`, the graph-level description
of colon ideals in :mod:`edgedepth.colon`, the bipartite-family search for
projective dimension in :mod:`edgedepth.kimura`, and an exact Betti-number
oracle used to check all of them in :mod:`edgedepth.oracle`.
"""

from .config import DEFAULT_CAPS, Caps, load_caps
from .errors import (BudgetExceeded, EdgeDepthError, InvalidArgument, PreconditionFailed,
                     UnsupportedFamily)
from .graph import (Graph, StarlikeShape, make_caterpillar3, make_cycle, make_path,
                    make_starlike, parse_graph_spec)
from .monomial import Monomial, MonomialIdeal, edge_ideal, power

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Caps", "DEFAULT_CAPS", "EdgeDepthError", "Graph", "InvalidArgument",
    "Monomial", "MonomialIdeal", "PreconditionFailed", "StarlikeShape", "UnsupportedFamily",
    "edge_ideal", "load_caps", "make_caterpillar3", "make_cycle", "make_path", "make_starlike",
    "parse_graph_spec", "power",
]
