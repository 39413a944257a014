"""Exact generators of bigraded monomial intersection and fan algebras."""

from fractions import Fraction

from . import _conealg
from ._conealg import (
    CapExceededError,
    Error,
    InputError,
    IntegerOverflowError,
    build_fan,
    check_fan_linear,
    cone_contains,
    decompose,
    fan_algebra_generators,
    fan_order,
    format_generators,
    hilbert_basis,
    intersection_as_fan_algebra,
    intersection_generators,
    locate,
    primitive,
    principal_cap_maximal_power,
    principal_intersection,
    semigroup_generators,
    verify_fan_algebra,
    verify_generation,
)


def asymptotic_limits(a, b):
    """The four containment limits as Fractions, keyed "l_I(J)", "L_I(J)", "l_J(I)", "L_J(I)"."""
    return {k: Fraction(n, d) for k, (n, d) in _conealg.asymptotic_limits(a, b).items()}


__all__ = [name for name in dir() if not name.startswith("_")]
