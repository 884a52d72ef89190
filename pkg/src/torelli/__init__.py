"""Exact computations in the Torelli group of a surface with one boundary component."""

from .boolean import BoolPoly, bar, degree, is_in_B3, multiply, sp2_action
from .calculus import (
    BPData,
    SepTwistData,
    SIPData,
    SSIPData,
    TorelliFactorization,
    chillingworth_closed_form,
    chillingworth_membership,
    sigma_bp,
    sigma_sep,
    sigma_separating_sip,
    sigma_sip,
    sigma_word,
    sip_in_bcj_kernel,
    sip_in_johnson_kernel,
    ssip_span,
    tau_bp,
    tau_sep,
    tau_sip,
    tau_word,
)
from .errors import (
    DerivationError,
    DimensionError,
    DomainError,
    InvariantError,
    MissingFactorizationError,
    SchemaError,
    TorelliError,
)
from .homology import HClass, SpMatrix, SurfaceConfig, intersection_pairing, is_torelli_shadow, mod2_reduce, transvection, word_to_sp
from .wedge import Wedge3, chillingworth_class, contraction, e_f, wedge3
from .words import (
    RelationEnv,
    Twist,
    check_derivation,
    cyclic_reduce,
    free_reduce,
    lantern_classify,
    sp_shadow_check,
    trace_normal_form,
)

__version__ = "0.1.0"
