"""Projective duality, discriminants of generic projections, polar invariants and braid monodromy."""
from .exactpoly import GF, PRIME_A, PRIME_B, QQ, Poly, Ring, parse_poly
from .groebner import BudgetExceeded, Ideal, buchberger
from .variety import (
    LinearProjection, LinearSubspace, NonGenericError, ProjectiveVariety, random_projection,
    random_subspace,
)
from .duality import check_biduality, dual_variety, same_variety, veronese_ideal
from .discriminant import (
    projection_chain, purity_classify, smooth_discriminant, verify_duality,
)
from .catalog import load_catalog

__version__ = "0.1.0"
