"""Monte Carlo and quadrature evaluation of kinematic integrals over rigid motions."""

from .estimators import (
    HAAR,
    ContactSlope,
    HaarNormalization,
    McEstimate,
    additive_global,
    contact_mr,
    contact_slope,
    estimate_pkf,
    local_additive_2d,
    local_additive_oracle_2d,
    mc_report,
    pkf_mc_report,
    pkf_rhs,
)
from .sampling import CHUNK, THREADS_ENV, generator, sample_motions, sample_rotation
from .window import TranslationWindow

__all__ = [
    "CHUNK", "ContactSlope", "HAAR", "HaarNormalization", "McEstimate", "THREADS_ENV",
    "TranslationWindow", "additive_global", "contact_mr", "contact_slope", "estimate_pkf",
    "generator", "local_additive_2d", "local_additive_oracle_2d", "mc_report", "pkf_mc_report",
    "pkf_rhs", "sample_motions", "sample_rotation",
]
