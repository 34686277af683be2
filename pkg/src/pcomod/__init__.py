"""Exact symbolic engine for Hopf algebras and principal comodule algebras,
with a numerical verifier for the multipullback constructions it models."""

from .scalars import GaussRat, Scalar, S_ONE, S_ZERO
from .ncpoly import Alphabet, NCPoly
from .rewrite import RewriteSystem, OrderViolation, SizeLimitError
from .tensors import Tensor
from .maps import LinearMap, gens_map, identity_map
from .hopf import (
    HopfAlgebra,
    HopfIdeal,
    check_hopf_axioms,
    convolution,
    left_coinvariant_test,
    quotient_hopf,
)
from .comodule import (
    CleavingMap,
    ComoduleAlgebra,
    SmashProduct,
    StrongConnection,
    canonical_map,
    is_coinvariant,
    miyashita_ulbrich_check,
    reduction_ideal,
    smash_product,
    strong_connection_from_cleaving,
    tensor_over_base_equal,
    theta_backward,
    theta_forward,
    verify_strong_connection,
    verify_theta_properties,
)
from .pullback import (
    Covering,
    Trivialisation,
    cotensor_membership,
    ideal_base_correspondence,
    multipullback_membership,
    piece_glue,
    prolong,
    reducibility_check,
    transition_functions,
)
from . import builtin

__version__ = "0.1.0"
