"""
Finite fields, phase-space geometry and the tabulated bases
"""
from discrete_wigner.base.field import GaloisField, build_field, field_for_dimension
from discrete_wigner.base.phase_space import (
    Line,
    PhasePoint,
    PhaseSpace,
    Striation,
    build_phase_space,
    build_striations,
    enumerate_lines,
    verify_geometry,
)
from discrete_wigner.base.mubs import Basis, MubSet, check_unbiased, mub_set
from discrete_wigner.base.report import CheckResult, Report
