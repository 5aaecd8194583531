"""Robust Matroid Center: greedy 5-approximation over a Rado relaxation."""

from .exact import ExactResult, best_coverage_at, exact_solve, exhaustive_rado_check
from .intersection import IntersectionState, OracleInconsistencyError, max_common_independent
from .matroid import (
    CountingMatroid,
    ExplicitMatroid,
    GraphicMatroid,
    Matroid,
    MatroidError,
    PartitionMatroid,
    TransversalMatroid,
    UniformMatroid,
    extend,
    is_independent,
    rank,
)
from .metric import MetricInstance, ball, ball_union_weight, candidate_radii, validate_metric
from .rado import (
    NoRepresentativesError,
    RadoContext,
    RadoSystem,
    build_relax,
    incremental_extend,
    is_rado_independent,
    make_rado,
    representatives,
)
from .solver import (
    GreedyRun,
    InfeasibleInstanceError,
    Solution,
    greedy_fixed_radius,
    search_radius,
    verify_solution,
)

__version__ = "0.1.0"
