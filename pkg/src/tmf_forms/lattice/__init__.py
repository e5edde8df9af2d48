"""Even unimodular lattices: Gram matrices, shells and theta series."""

from .gram import BUILTIN_NAMES, GramLattice, builtin, determinant, leading_minors, validate
from .shells import DEFAULT_BUDGET, ShellTable, enumerate_shells
from .theta import (
    BilinearCheck,
    BorcherdsReport,
    QuadRefinement,
    as_vector,
    bilinear_check,
    borcherds_check,
    phi_mu,
    quad_refinement,
    theta,
    theta_mu,
    theta_numerator,
)

__all__ = [
    "BUILTIN_NAMES", "GramLattice", "builtin", "determinant", "leading_minors", "validate",
    "DEFAULT_BUDGET", "ShellTable", "enumerate_shells",
    "BilinearCheck", "BorcherdsReport", "QuadRefinement", "as_vector", "bilinear_check",
    "borcherds_check", "phi_mu", "quad_refinement", "theta", "theta_mu", "theta_numerator",
]
