"""Ultrametric distance on Eisenstein polynomials over Q_p and the ramification
invariants that decide when two of them generate the same extension."""

from .errors import (
    EisenramError,
    InsufficientPrecision,
    NotConstructible,
    NotEisenstein,
    NotGalois,
)
from .extension import EisensteinPoly, Ring, ext_val, galois_check, make_eisenstein, norm, roots_of
from .identity import decide, decide_with_oracle, gu_family, tbreak_check, wild_counterexample
from .metric import distance_E, distance_P
from .norm_graded import coker_order, exactness_check, graded_norm, theta_image
from .padic import INF, resultant, val_int
from .ramification import ramification_data, to_serre

__all__ = [
    "INF",
    "EisenramError",
    "EisensteinPoly",
    "InsufficientPrecision",
    "NotConstructible",
    "NotEisenstein",
    "NotGalois",
    "Ring",
    "coker_order",
    "decide",
    "decide_with_oracle",
    "distance_E",
    "distance_P",
    "exactness_check",
    "ext_val",
    "galois_check",
    "graded_norm",
    "gu_family",
    "make_eisenstein",
    "norm",
    "ramification_data",
    "resultant",
    "roots_of",
    "tbreak_check",
    "theta_image",
    "to_serre",
    "val_int",
    "wild_counterexample",
]
