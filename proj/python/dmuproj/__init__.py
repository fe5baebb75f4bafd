"""Projection of analytic functions onto polynomials in D_mu for finite atomic measures."""

from ._dmuproj import (
    AnalyticFn,
    AtomicMeasure,
    ConsistencyError,
    Error,
    IllConditioned,
    InvalidArgument,
    ProjectionResult,
    UnsupportedDegree,
    ValidationReport,
    basis,
    complete_homogeneous,
    cross_validate,
    distance,
    elementary,
    fast_monomial_coefficients,
    inner,
    norm,
    oracle_distance,
    oracle_project,
    project,
)

__all__ = [
    "AnalyticFn",
    "AtomicMeasure",
    "ConsistencyError",
    "Error",
    "IllConditioned",
    "InvalidArgument",
    "ProjectionResult",
    "UnsupportedDegree",
    "ValidationReport",
    "basis",
    "complete_homogeneous",
    "cross_validate",
    "distance",
    "elementary",
    "fast_monomial_coefficients",
    "inner",
    "norm",
    "oracle_distance",
    "oracle_project",
    "project",
]
