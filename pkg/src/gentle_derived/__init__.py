"""Derived-equivalence classification and AR-quiver calculus for graded gentle one-cycle algebras."""

from .dsl import builtin, parse, serialize
from .gentle import check_gentle, clock_invariants, has_finite_global_dimension, match_shape, signed_cycle_degree
from .normal_form import Gamma, GammaPrime, conjecture_check, derived_equivalent, normal_form

__all__ = [
    "Gamma",
    "GammaPrime",
    "builtin",
    "check_gentle",
    "clock_invariants",
    "conjecture_check",
    "derived_equivalent",
    "has_finite_global_dimension",
    "match_shape",
    "normal_form",
    "parse",
    "serialize",
    "signed_cycle_degree",
]
