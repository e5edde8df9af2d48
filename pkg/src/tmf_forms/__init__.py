"""Exact q-expansions, Weierstrass curves, lattice theta series and p-adic
congruences for the arithmetic side of topological modular forms."""

from .errors import TmfFormsError
from .modforms import (
    ModularForm,
    ModularFormDecomposition,
    bernoulli,
    decompose,
    eisenstein,
    generator_q,
    residue_congruence_equiv,
    residue_delta,
    tau,
    weight_basis,
)
from .series import BiSeries, PadicValuation, QSeries, invert_unit, mul, reduce_mod, valuation
from .weierstrass import (
    CurveInvariants,
    CurveTransformation,
    FormalGroupLaw,
    WeierstrassCurve,
    formal_group_law,
    invariants,
    p_expansion,
    sigma_expansion,
    transform,
)

__version__ = "0.1.0"

__all__ = [
    "TmfFormsError", "ModularForm", "ModularFormDecomposition", "bernoulli", "decompose",
    "eisenstein", "generator_q", "residue_congruence_equiv", "residue_delta", "tau",
    "weight_basis", "BiSeries", "PadicValuation", "QSeries", "invert_unit", "mul",
    "reduce_mod", "valuation", "CurveInvariants", "CurveTransformation", "FormalGroupLaw",
    "WeierstrassCurve", "formal_group_law", "invariants", "p_expansion", "sigma_expansion",
    "transform",
]
