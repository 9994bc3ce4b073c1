"""Derived-equivalence normal forms Gamma(p,q,r) and GammaPrime(q,r)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import GentleError, ParameterOutOfRange, UnsupportedShape
from .gentle import (
    GammaPrimeShape,
    GammaShape,
    LambdaShape,
    check_gentle,
    clock_invariants,
    has_finite_global_dimension,
    match_shape,
    signed_cycle_degree,
)
from .quiver import GradedAlgebraPresentation


@dataclass(frozen=True)
class Gamma:
    p: int
    q: int
    r: int

    def __str__(self) -> str:
        return f"Gamma({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class GammaPrime:
    q: int
    r: int

    def __str__(self) -> str:
        return f"GammaPrime({self.q},{self.r})"


NormalForm = Union[Gamma, GammaPrime]


def canonical(nf: NormalForm) -> NormalForm:
    """Canonical Gamma representative: r >= 0, and p <= q when r = 0."""
    if isinstance(nf, Gamma):
        p, q, r = nf.p, nf.q, nf.r
        if r < 0 or (r == 0 and p > q):
            p, q, r = q, p, -r
        return Gamma(p, q, r)
    return nf


def lambda_normal_form(r: int, n: int, m: int, d: int) -> NormalForm:
    """Normal form of Lambda(r,n,m,d).

    n > r: Gamma(n-r, m+r, r-d).  n = r: GammaPrime(n+m, n-d), which is the
    same algebra as the quotient of the oriented (n+m)-cycle with an arrow of
    degree m+d written in the GammaPrime(q, r) parametrization.
    """
    if not (n >= r >= 1 and m >= 0):
        raise ParameterOutOfRange(f"Lambda requires n >= r >= 1 and m >= 0 (got r={r}, n={n}, m={m})")
    if n > r:
        return canonical(Gamma(n - r, m + r, r - d))
    return GammaPrime(n + m, n - d)


def invariant_report(P: GradedAlgebraPresentation) -> dict:
    """Everything computable about an input the normal-form pipeline cannot place."""
    gr = check_gentle(P)
    out = {"gentle": gr.as_dict()}
    if gr.is_gentle and gr.connected and gr.cycle_count == 1:
        out["clock"] = clock_invariants(P).as_dict()
        out["signed_cycle_degree"] = signed_cycle_degree(P)
        out["finite_global_dimension"] = has_finite_global_dimension(P)
    return out


def normal_form(P: GradedAlgebraPresentation) -> NormalForm:
    gr = check_gentle(P)
    if not (gr.is_gentle and gr.connected and gr.cycle_count == 1):
        raise UnsupportedShape("input is not a connected gentle one-cycle algebra", invariant_report(P))
    tag = match_shape(P).tag
    if isinstance(tag, GammaShape):
        return canonical(Gamma(tag.p, tag.q, tag.r))
    if isinstance(tag, LambdaShape):
        return lambda_normal_form(tag.r, tag.n, tag.m, tag.d)
    if isinstance(tag, GammaPrimeShape):
        return GammaPrime(tag.q, tag.r)
    raise UnsupportedShape(f"unrecognized shape: {tag.reason}", invariant_report(P))


def derived_equivalent(a: NormalForm, b: NormalForm) -> bool:
    if type(a) is not type(b):
        return False
    return canonical(a) == canonical(b)


_NF_RE = re.compile(r"\s*(Gamma|GammaPrime)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)\s*\Z")


def parse_normal_form(text: str) -> NormalForm:
    m = _NF_RE.match(text)
    if not m:
        raise ParameterOutOfRange(f"not a normal-form literal: {text!r}")
    kind = m.group(1)
    if kind == "Gamma":
        if m.group(4) is None:
            raise ParameterOutOfRange("Gamma takes three parameters")
        p, q, r = int(m.group(2)), int(m.group(3)), int(m.group(4))
        if p < 1 or q < 1:
            raise ParameterOutOfRange("Gamma requires p, q >= 1")
        return Gamma(p, q, r)
    if m.group(4) is not None:
        raise ParameterOutOfRange("GammaPrime takes two parameters")
    q, r = int(m.group(2)), int(m.group(3))
    if q < 1:
        raise ParameterOutOfRange("GammaPrime requires q >= 1")
    return GammaPrime(q, r)


@dataclass(frozen=True)
class ConjectureReport:
    graded_clock: bool
    normal_form: NormalForm
    zero_form: bool  # normal form is Gamma(., ., 0) or GammaPrime(., 0)
    d_plus: int
    d_minus: int

    @property
    def agree(self) -> bool:
        return self.graded_clock == self.zero_form

    def as_dict(self) -> dict:
        return {
            "graded_clock": self.graded_clock,
            "d_plus": self.d_plus,
            "d_minus": self.d_minus,
            "normal_form": str(self.normal_form),
            "normal_form_has_zero_r": self.zero_form,
            "verdict": "agree" if self.agree else "disagree",
        }


def conjecture_check(P: GradedAlgebraPresentation) -> ConjectureReport:
    """Compare the graded clock condition with the normal form having r = 0."""
    nf = normal_form(P)
    ci = clock_invariants(P)
    return ConjectureReport(ci.graded_clock, nf, nf.r == 0, ci.d_plus, ci.d_minus)
