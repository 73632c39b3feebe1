"""Exact tilt-stability computations for ideal sheaves of space curves in P^3."""

from .bounds import (
    BoundReport,
    SpecialityReport,
    bmt_identity_check,
    genus_bound,
    genus_bound_at,
    hom_vanishing_witness,
    speciality_threshold,
)
from .certify import (
    CertReport,
    CurveInput,
    certify_semistable_line,
    critical_beta,
    oracle_crosscheck,
)
from .chern import ChernP3, TwistedChern, euler_char, ideal_sheaf_char, line_bundle, tensor_line, twist
from .exactnum import QuadNum, Surd, make_quad, parse_quad
from .tilt import ExtSlope, TiltPoint, bmt_quadratic, classical_bg_ok, discriminant, mu_slope, nu_slope
from .walls import (
    Candidate,
    WallCircle,
    enumerate_destabilizers,
    rank_bound,
    wall_expression,
    wall_of,
)

__all__ = [
    "BoundReport",
    "Candidate",
    "CertReport",
    "ChernP3",
    "CurveInput",
    "ExtSlope",
    "QuadNum",
    "SpecialityReport",
    "Surd",
    "TiltPoint",
    "TwistedChern",
    "WallCircle",
    "bmt_identity_check",
    "bmt_quadratic",
    "certify_semistable_line",
    "classical_bg_ok",
    "critical_beta",
    "discriminant",
    "enumerate_destabilizers",
    "euler_char",
    "genus_bound",
    "genus_bound_at",
    "hom_vanishing_witness",
    "ideal_sheaf_char",
    "line_bundle",
    "make_quad",
    "mu_slope",
    "nu_slope",
    "oracle_crosscheck",
    "parse_quad",
    "rank_bound",
    "speciality_threshold",
    "tensor_line",
    "twist",
    "wall_expression",
    "wall_of",
]
