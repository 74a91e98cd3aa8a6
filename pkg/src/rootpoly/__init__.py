"""Root polytopes of regular oriented matroids and Eulerian branching greedoids."""

from .digraph import Digraph, parse_digraph
from .greedoid import METHODS, BranchingGreedoid, greedoid_polynomial
from .matroid import MatroidRep, SignedSubset, dual, graphic_matroid
from .polynomial import Polynomial
from .polytope import RootPolytope, dual_root_polytope

__version__ = "0.1.0"
