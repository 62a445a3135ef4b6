"""Exact checkers for gs-monoidal Kleisli categories of finite-set monads.

The package builds concrete commutative monads on finite sets (distributions,
measures, powersets, writer monads, free abelian groups), forms their Kleisli
categories with copy/discard structure, and machine-checks the algebraic
facts that relate affineness of the monad to the Markov / weakly Markov
property of the category, using rational arithmetic throughout.
"""

from .errors import GsmonError, NotNormalizable
from .finset import FinFun, FinSet, UNIT, product
from .independence import (
    CIResult,
    check_ci,
    check_ci_n2_equation,
    check_local_independence,
    marginal,
    product_of_marginals,
)
from .kernels import (
    Kernel,
    compose,
    copy_k,
    discard_k,
    effect_mul,
    equivalent,
    gs_law_report,
    identity,
    is_copyable,
    is_discardable,
    lift,
    mass,
    normalize,
    scalar_action,
    swap_k,
    tensor,
    try_effect_inverse,
)
from .monads import (
    ALL_MONAD_IDS,
    Classification,
    MonadInstance,
    TValue,
    check_monad_laws,
    classify,
    get_instance,
)
from .monoid import (
    FiniteMonoid,
    MONOID_LIBRARY,
    assoc_square_is_pullback,
    get_monoid,
    group_pullback_agreement,
    is_group,
)
from .rational import Rat, format_rat, parse_rat
from .report import CheckReport
from .squares import (
    Square,
    assoc_square,
    build_square,
    check_commutes,
    check_pullback,
    positivity_square,
    strong_affine_square,
    theorem_harness,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_MONAD_IDS",
    "CIResult",
    "CheckReport",
    "Classification",
    "FinFun",
    "FinSet",
    "FiniteMonoid",
    "GsmonError",
    "Kernel",
    "MONOID_LIBRARY",
    "MonadInstance",
    "NotNormalizable",
    "Rat",
    "Square",
    "TValue",
    "UNIT",
    "assoc_square",
    "assoc_square_is_pullback",
    "build_square",
    "check_ci",
    "check_ci_n2_equation",
    "check_commutes",
    "check_local_independence",
    "check_monad_laws",
    "check_pullback",
    "classify",
    "compose",
    "copy_k",
    "discard_k",
    "effect_mul",
    "equivalent",
    "format_rat",
    "get_instance",
    "get_monoid",
    "group_pullback_agreement",
    "gs_law_report",
    "identity",
    "is_copyable",
    "is_discardable",
    "is_group",
    "lift",
    "marginal",
    "mass",
    "normalize",
    "parse_rat",
    "positivity_square",
    "product",
    "product_of_marginals",
    "scalar_action",
    "strong_affine_square",
    "swap_k",
    "tensor",
    "theorem_harness",
    "try_effect_inverse",
]
