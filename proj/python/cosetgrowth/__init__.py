"""Double-coset growth in finitely presented groups."""

from fractions import Fraction

from . import _core
from ._core import (
    CosetGrowthError,
    Presentation,
    __version__,
    build_rips,
    dehn_reduce,
    double_coset_canonical,
    double_coset_growth,
    growth,
    is_finite_index,
    is_member,
    max_piece,
    theorem1_check,
)


def satisfies_metric_condition(presentation, lam):
    """C'(lam) for the symmetrized closure; lam may be a Fraction, int or "p/q" string."""
    if isinstance(lam, (Fraction, int)):
        lam = str(Fraction(lam))
    return _core.satisfies_metric_condition(presentation, lam)


__all__ = [
    "CosetGrowthError",
    "Presentation",
    "__version__",
    "build_rips",
    "dehn_reduce",
    "double_coset_canonical",
    "double_coset_growth",
    "growth",
    "is_finite_index",
    "is_member",
    "max_piece",
    "satisfies_metric_condition",
    "theorem1_check",
]
