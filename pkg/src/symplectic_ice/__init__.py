"""Exact lattice model of free-fermionic ice with a reflecting boundary, and its symplectic characters."""

from .exact import LaurentT, Rational, format_scalar, rat_det
from .lattice import OccupationState, OperatorParams, OperatorSpec, StateVector, apply, matrix_element
from .schur import deformation_factor, factorial_sp, sp, weyl_denominator
from .verify import Report, SuiteSpec, run_suite, sample_point
from .wavefunctions import Config, YoungDiagram, dual_wavefunction, wavefunction

__all__ = [
    "Config", "LaurentT", "OccupationState", "OperatorParams", "OperatorSpec", "Rational", "Report",
    "StateVector", "SuiteSpec", "YoungDiagram", "apply", "deformation_factor", "dual_wavefunction",
    "factorial_sp", "format_scalar", "matrix_element", "rat_det", "run_suite", "sample_point", "sp",
    "weyl_denominator", "wavefunction",
]
