"""Separation axioms on finite topological spaces, plus a small catalog of
infinite spaces described symbolically."""

from .catalog import FAMILY_NAMES, DescribedSet, DescribedSpace, d_apply, d_classify
from .classify import AXIOMS, classify, classify_all, t_kappa_xi
from .core import (
    FinSpace,
    canonical_form,
    closure,
    discrete,
    from_preorder,
    generate_topology,
    indiscrete,
    interior,
    sierpinski,
    subspace,
    topological_sum,
)
from .dsl import emit_space, load_space, parse_space
from .enumeration import SearchQuery, count_topologies, enumerate_topologies, implication_matrix, search
from .errors import (
    BoundExceeded,
    EmptyCarrier,
    NotABijection,
    NotAClosureOperator,
    NotATopology,
    TopsepError,
    Unrepresentable,
    Unsupported,
)
from .maps import SpaceMap
from .operators import BUILTIN, apply, custom, operator
from .verify import verify_paper

__version__ = "0.1.0"
