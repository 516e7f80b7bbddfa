"""Local-unitary symmetries of hypergraph states.

Hypergraphs and sign vectors, the exact LU stabilizer algebra, gate relations
and the families built from them, Majorana analysis of symmetric states, and
partial traces as mixtures of hypergraph states.
"""

from importlib.metadata import PackageNotFoundError, version

from .errors import HyperLUError, ParseError
from .hypergraph import (Hypergraph, complete_sizes, delete, essential_hypergraph,
                         make_complete, parse_hypergraph, shrink)
from .ptrace import (HypergraphMixture, mixture_density, mixture_pair_relation,
                     reconstruct_candidates, trace_one, trace_set)
from .stabilizer import StabilizerBasis, stabilizer_algebra, structural_report
from .state import AlgebraElement, SignState, build_state, signs_to_hypergraph

try:
    __version__ = version("artifact")
except PackageNotFoundError:  # running from a source tree
    __version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "HyperLUError", "Hypergraph", "HypergraphMixture", "ParseError",
    "SignState", "StabilizerBasis", "build_state", "complete_sizes", "delete",
    "essential_hypergraph", "make_complete", "mixture_density", "mixture_pair_relation",
    "parse_hypergraph", "reconstruct_candidates", "shrink", "signs_to_hypergraph",
    "stabilizer_algebra", "structural_report", "trace_one", "trace_set",
]
