"""Numerical diagnostics for Schauder bases in finite-dimensional Hilbert
spaces, simultaneous Diophantine approximation, and monomial systems over
discrete measures on the unit circle."""
from .diophantine import ApproxResult, simultaneous_approx, verify_bound
from .measure import (
    DiscreteMeasure,
    MomentSearchResult,
    delta_for,
    geometric_irrational_measure,
    interleave_enumeration,
    moment,
    monomial_system,
    near_unimodular_exponent,
    pushforward,
    tail_cutoff,
)
from .numerics import RankDeficiencyError, left_inverse, operator_norm, solve
from .schauder import (
    ProjectionReport,
    SchauderSystem,
    angle,
    angle_bound,
    basis_constant,
    example_minimal_sequence,
    min_angle,
    natural_projection,
    pair_lower_bound,
    verify_angle_theorem,
)
from .shiftrep import (
    ShiftRepresentation,
    cyclic_shift_eigenvalues,
    multiplication_matrix,
    shift_divergence_experiment,
    shift_representation,
)

__version__ = "0.1.0"
