"""Exact leaky zero forcing on small graphs."""

from ._core import (
    BudgetExceeded,
    Graph,
    ParseError,
    UsageError,
    chain,
    check,
    closure,
    complete_bipartite,
    containment,
    cycle,
    generalized_petersen,
    half_cube_set,
    hypercube,
    is_zero_forcing_set,
    mandatory_vertices,
    path,
    random_tree,
    solve,
    suite_names,
    verify,
    wheel,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ParseError",
    "UsageError",
    "chain",
    "check",
    "closure",
    "complete_bipartite",
    "containment",
    "cycle",
    "generalized_petersen",
    "half_cube_set",
    "hypercube",
    "is_zero_forcing_set",
    "mandatory_vertices",
    "path",
    "random_tree",
    "solve",
    "suite_names",
    "verify",
    "wheel",
]
