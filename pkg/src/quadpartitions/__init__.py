"""Exact partition counts for totally positive elements of real quadratic fields.

The package computes, in exact integer arithmetic throughout, the number of
ways to write a totally positive element of the ring of integers of Q(sqrt(D))
as an unordered sum of totally positive elements.  It also enumerates the
indecomposable elements and the fundamental unit via the continued fraction
expansion of the associated purely periodic surd, studies the parity of the
cumulative counting function, and searches for all elements with a prescribed
number of partitions.
"""

from .contfrac import FieldContext, build_context, expand_sigma, floor_ratio_eps
from .errors import BudgetExceeded, DivisibilityViolation, InvariantViolation
from .field import Field, QElement, is_squarefree
from .oracle import count_partitions, enumerate_partitions
from .parity import (
    ParityProfile,
    ParityReport,
    count_trace,
    cumulative_P,
    odd_sigma_set,
    parity_check,
    trace_layer_count,
)
from .partition import (
    GridPool,
    PartitionGrid,
    asymptotic_estimate,
    build_grid,
    enumerate_interval,
    p_rational,
    p_value,
    sigma_K,
)
from .search import (
    SearchReport,
    ThresholdRow,
    dm_scan,
    en_fn_bounds,
    exhaustive_scan_range,
    find_kmax,
    find_ymax,
    fundamental_representative,
    in_fundamental_domain,
    search_m,
    slice_element,
    verify_thresholds,
    witness_m4,
    witness_m6,
)
from .serialize import (
    dumps_canonical,
    element_from_obj,
    element_to_obj,
    grid_from_obj,
    grid_to_obj,
    report_from_obj,
    report_to_obj,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DivisibilityViolation",
    "Field",
    "FieldContext",
    "GridPool",
    "InvariantViolation",
    "ParityProfile",
    "ParityReport",
    "PartitionGrid",
    "QElement",
    "SearchReport",
    "ThresholdRow",
    "__version__",
    "asymptotic_estimate",
    "build_context",
    "build_grid",
    "count_partitions",
    "count_trace",
    "cumulative_P",
    "dm_scan",
    "dumps_canonical",
    "element_from_obj",
    "element_to_obj",
    "en_fn_bounds",
    "enumerate_interval",
    "enumerate_partitions",
    "exhaustive_scan_range",
    "expand_sigma",
    "find_kmax",
    "find_ymax",
    "floor_ratio_eps",
    "fundamental_representative",
    "grid_from_obj",
    "grid_to_obj",
    "in_fundamental_domain",
    "is_squarefree",
    "odd_sigma_set",
    "p_rational",
    "p_value",
    "parity_check",
    "report_from_obj",
    "report_to_obj",
    "search_m",
    "sigma_K",
    "slice_element",
    "trace_layer_count",
    "verify_thresholds",
    "witness_m4",
    "witness_m6",
]
