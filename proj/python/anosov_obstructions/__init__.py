"""Exact cohomological obstructions to (transitive) Anosov diffeomorphisms.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from anosov_obstructions._core import (  # noqa: F401
    GradedRing,
    GradedAutomorphism,
    analyze,
    anosov_compatibility,
    betti_profile,
    block_table,
    check_cup_preservation,
    duality_check,
    enumerate_isometries,
    exterior_power,
    fixed_point_count,
    growth_analysis,
    induce,
    kronecker,
    lefschetz_sequence,
    oracle_cross_check,
    power_stabilize,
    section7_tables,
    smith_count,
    solve_rank2_middle,
    theorem110_check,
)

__all__ = [
    "GradedRing",
    "GradedAutomorphism",
    "analyze",
    "anosov_compatibility",
    "betti_profile",
    "block_table",
    "check_cup_preservation",
    "duality_check",
    "enumerate_isometries",
    "exterior_power",
    "fixed_point_count",
    "growth_analysis",
    "induce",
    "kronecker",
    "lefschetz_sequence",
    "oracle_cross_check",
    "power_stabilize",
    "section7_tables",
    "smith_count",
    "solve_rank2_middle",
    "theorem110_check",
]
