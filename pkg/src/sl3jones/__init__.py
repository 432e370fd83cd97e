"""Exact sl3 colored Jones polynomials of 2-bridge links and torus-link tails."""
__version__ = "0.1.0"

from .qexact import NotDivisibleError, RationalQ, SixthPowerLaurent, TruncatedSeries
from .jones import (
    FramedInvariant,
    TwoBridgeWord,
    g_full_twist_form,
    jones_two_bridge,
    min_degree,
    psi_closed_form,
    torus_jones,
)
from .tails import (
    pattern_analysis,
    stabilization_check,
    tail_g,
    tail_psi,
    verify_identity,
)

__all__ = [
    "__version__", "NotDivisibleError", "RationalQ", "SixthPowerLaurent", "TruncatedSeries",
    "FramedInvariant", "TwoBridgeWord", "g_full_twist_form", "jones_two_bridge", "min_degree",
    "psi_closed_form", "torus_jones", "pattern_analysis", "stabilization_check", "tail_g",
    "tail_psi", "verify_identity",
]
