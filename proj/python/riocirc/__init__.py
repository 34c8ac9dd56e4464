"""Exact Riordan arrays (1/(1-t^{d+1}), t p(t)) with periodic columns.

The heavy lifting happens in the C++ extension; exact rationals cross the
boundary as strings like "-17/27". ``fractions.Fraction`` accepts that form
directly, and :func:`as_fractions` converts nested containers in one go.
"""

import os
from fractions import Fraction

_bundled_fixtures = os.path.join(os.path.dirname(__file__), "data", "oeis")
if "OEIS_FIXTURE_DIR" not in os.environ and os.path.isdir(_bundled_fixtures):
    os.environ["OEIS_FIXTURE_DIR"] = _bundled_fixtures

from ._core import (  # noqa: F401,E402
    LibraryError,
    TheoremViolation,
    TruncationError,
    UnavailableError,
    az_sequences,
    build_array,
    catalan,
    classify,
    closed_form_orbit,
    column,
    csum_coefficients,
    eigenvalues,
    head_sums,
    matrix_order,
    oeis_check,
    orbit,
    orbit_period,
    periodic_block,
    rotated_orbit,
    theorem6_check,
    theorem6_sequence,
    verify_rogers,
    verify_theorem1,
)


def as_fractions(value):
    """Recursively converts rational strings to ``fractions.Fraction``."""
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (list, tuple)):
        return type(value)(as_fractions(v) for v in value)
    if isinstance(value, dict):
        return {k: as_fractions(v) for k, v in value.items()}
    return value


__all__ = [
    "LibraryError",
    "TheoremViolation",
    "TruncationError",
    "UnavailableError",
    "as_fractions",
    "az_sequences",
    "build_array",
    "catalan",
    "classify",
    "closed_form_orbit",
    "column",
    "csum_coefficients",
    "eigenvalues",
    "head_sums",
    "matrix_order",
    "oeis_check",
    "orbit",
    "orbit_period",
    "periodic_block",
    "rotated_orbit",
    "theorem6_check",
    "theorem6_sequence",
    "verify_rogers",
    "verify_theorem1",
]
