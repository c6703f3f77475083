"""Exact verification toolkit for finite weighted quivers.

The package models finite quivers whose edges carry positive rational
weights, checks weight-preserving (regular) morphisms between them, builds
the associated Hilbert-module correspondence and its pullback maps with
exact Gaussian-rational arithmetic, and verifies the induced generator
homomorphisms of the weighted Cuntz-Krieger presentations in an exact
degree-<=2 fragment.
"""

from .correspondence import (
    EdgeVector,
    FiberBlockOperator,
    VertexFunction,
    ideal_JX,
    identity_operator,
    inner_product,
    module_actions,
    norm,
    norm_sq,
    phi,
    rank_one_decompose,
    sigma,
    sum_thetas,
    theta,
    zero_operator,
)
from .cuntz_krieger import (
    Deg2Element,
    GeneratorMap,
    OutsideFragmentError,
    Presentation,
    deg2_equal,
    deg2_reduce,
    emit_presentation,
    format_deg2,
    grading,
    induced_map,
    isom,
    isom_star,
    proj,
    verify_induced,
)
from .factor_maps import check_factor_map, equivalence_check, is_counting
from .generators import (
    gen_a2_broken_morphism,
    gen_a3_broken_morphism,
    gen_composable_pair,
    gen_quiver,
    gen_regular_morphism,
)
from .morphisms import (
    QuiverMorphism,
    check_morphism,
    check_regular,
    compose,
    identity,
    integral_identity_check,
    pushforward,
)
from .pullback import (
    CorrMorphism,
    build_corr_morphism,
    c4lemma_check,
    check_covariance,
    contraction_check,
    mu1_super,
)
from .quivers import Edge, FiniteQuiver, classify, in_fiber, make_quiver, validate
from .scalars import ScalarQ, as_scalar

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
