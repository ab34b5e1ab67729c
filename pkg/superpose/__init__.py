"""
Approximate multi-peak superpositions.
"""

from superpose.superposition import (
    SUPERPOSITION_GUARD,
    SpacingResidualCurve,
    SuperpositionSolution,
    SuperpositionSpec,
    build,
    pairwise_residual_bound,
    peak_count,
    spacing_residual_curve,
)

__all__ = [
    "SUPERPOSITION_GUARD",
    "SpacingResidualCurve",
    "SuperpositionSolution",
    "SuperpositionSpec",
    "build",
    "pairwise_residual_bound",
    "peak_count",
    "spacing_residual_curve",
]
