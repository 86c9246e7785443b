"""Steklov eigenvalues, eigenvalue bounds and boundary flows on graphs."""

from ._core import (
    Graph,
    SteklovError,
    degree_diameter_value,
    dtn_matrix,
    duality_gap,
    evaluate_bounds,
    harmonic_extension,
    lambda_s,
    laplacian,
    min_congestion,
    node_weighted_distance,
    penalized_spectrum,
    rayleigh_quotient,
    run_cli,
    steklov_spectrum,
)

__all__ = [
    "Graph",
    "SteklovError",
    "degree_diameter_value",
    "dtn_matrix",
    "duality_gap",
    "evaluate_bounds",
    "harmonic_extension",
    "lambda_s",
    "laplacian",
    "min_congestion",
    "node_weighted_distance",
    "penalized_spectrum",
    "rayleigh_quotient",
    "run_cli",
    "steklov_spectrum",
]
