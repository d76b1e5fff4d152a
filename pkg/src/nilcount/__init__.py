"""Exact counts of strictly upper-triangular matrices over F_q by Jordan type."""

from .counting import (
    FactoredCount,
    d_exponent,
    deg_p,
    deg_r,
    e_exponent,
    factored_count,
    p_poly,
    r_poly,
)
from .oracle import CountTally, UTMatrix, enumerate_counts, jordan_type, sample_counts
from .partitions import (
    Partition,
    RemovableCell,
    dim_irrep,
    parse_symbolic,
    partitions_of,
    to_symbolic,
)
from .polynomial import IntPolynomial, TruncatedSeries, factor_out, geometric_sum
from .stabilization import StabilizationReport, limit_series, s_factor, verify_stabilization

__all__ = [
    "CountTally",
    "FactoredCount",
    "IntPolynomial",
    "Partition",
    "RemovableCell",
    "StabilizationReport",
    "TruncatedSeries",
    "UTMatrix",
    "d_exponent",
    "deg_p",
    "deg_r",
    "dim_irrep",
    "e_exponent",
    "enumerate_counts",
    "factor_out",
    "factored_count",
    "geometric_sum",
    "jordan_type",
    "limit_series",
    "p_poly",
    "parse_symbolic",
    "partitions_of",
    "r_poly",
    "s_factor",
    "sample_counts",
    "to_symbolic",
    "verify_stabilization",
]
