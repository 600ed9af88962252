"""Exact verification engine for the even-dimensional generalized MICZ-Kepler problem."""
from .exact import GaussianRational, QuadExtValue, RationalPoint, random_points
from .scalar import ScalarExpr, context, differentiate, eval_exact, normalize
from .clifford import Rep, casimir, gamma_matrices, rep_s2mu
from .diffop import DiffOp, Section, apply, commutator, compose, conjugate_sqrt_r
from .report import IdentityViolation, ReportItem, VerificationReport
from .micz import (
    ConfigError, ConventionMismatch, GaugeField, GeneratorSet, ProblemConfig, build_generators,
    field_strength, gauge_potential, verify_closed_forms, verify_commutation_relations,
    verify_gauge_identities, verify_quadratic_relations,
)
from .radial import (
    RadialFunction, RadialOp, SpectralLabel, energy, full_dimension_scalar_check, laguerre_poly,
    radial_eigenfunction, radial_operator, twist_map, verify_radial_eigensystem,
)
from .reps import (
    NonDominant, Weight, abstract_algebra_checks, branch_B_to_D, k_type_table, verify_decompositions,
    weyl_dimension,
)
