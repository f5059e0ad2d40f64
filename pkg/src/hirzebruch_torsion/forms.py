"""Invariant (1,1)- and (2,2)-form calculus on the ruled surface S_n.

All forms in play are invariant under the unitary symmetry of the base and
fiber metrics, so at a normal-frame point they are determined by two radial
coefficients in the invariant u = |z|^2 * |frame|^(2n):

    form = fx(u) * (pullback of the base Fubini-Study form)
         + fphi(u) * phi,

where phi is the normalized fiber area element (i/2pi)|dz + ...|^2.  Top
forms are fx-free multiples of base ^ phi, and every global integral reduces
to a half-line integral of the remaining radial coefficient (the base form
has total mass 1).

dd^c of a radial potential h(u) is the closed chain rule

    dd^c h = (n u h'(u)) * base + (h'(u) + u h''(u)) * phi,

which reproduces both catalog derivative formulas exactly; it is the single
rule from which all curvature forms here are assembled.

Exact fiber/total integrals are carried on the form objects when they follow
from linearity, from wedging against a constant multiple of the base form,
from Stokes (an exact factor against a closed one), or from a small registry
of registered values; everything registered is independently re-verified by
quadrature in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .radial import (
    DEFAULT_CONFIG,
    KeyT,
    QuadratureConfig,
    RADIAL_ONE,
    RADIAL_ZERO,
    RadialFunction,
    VerificationEntry,
    integrate_halfline,
    radial_add,
    radial_const,
    radial_mul,
    radial_scale,
)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Radial building blocks
# ---------------------------------------------------------------------------


def coeff_A(n: int) -> RadialFunction:
    """Base coefficient of the fiberwise Fubini-Study curvature form."""
    return RadialFunction(lambda u: (1 + (n + 1) * u) / (1 + u), decay_order=0.0,
                          key=("A", n), const_value=Fraction(1) if n == 0 else None)


def coeff_B() -> RadialFunction:
    """Fiber coefficient 1/(1+u)^2, of unit half-line mass."""
    return RadialFunction(lambda u: 1 / (1 + u) ** 2, decay_order=2.0, key=("B",))


def ratio_R(n: int) -> RadialFunction:
    """Quotient-metric ratio R(u) = (1 + (n+1)u)/(1 + u)."""
    return RadialFunction(lambda u: (1 + (n + 1) * u) / (1 + u), decay_order=0.0,
                          key=("R", n), const_value=Fraction(1) if n == 0 else None)


def log_R(n: int) -> RadialFunction:
    """log of the quotient-metric ratio; identically 0 in the split case n = 0."""
    if n == 0:
        return RADIAL_ZERO
    return RadialFunction(lambda u: math.log((1 + (n + 1) * u) / (1 + u)),
                          decay_order=0.0, key=("logR", n))


def reciprocal_A(n: int) -> RadialFunction:
    return RadialFunction(lambda u: (1 + u) / (1 + (n + 1) * u), decay_order=0.0,
                          key=("recipA", n), const_value=Fraction(1) if n == 0 else None)


def reciprocal_B() -> RadialFunction:
    return RadialFunction(lambda u: (1 + u) ** 2, decay_order=-2.0, key=("recipB",))


# ---------------------------------------------------------------------------
# Radial potentials and dd^c
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialPotential:
    """A potential h(u) with its analytic first and second derivatives.

    fiber_boundary is lim_{u->inf} u h'(u); it is the exact half-line mass of
    the phi-coefficient of dd^c h (the integrand is the derivative of u h').
    """

    h: Callable[[float], float]
    dh: Callable[[float], float]
    d2h: Callable[[float], float]
    key: KeyT
    fiber_boundary: Fraction
    is_zero: bool = False


def potential_log_shift(a: int) -> RadialPotential:
    """h(u) = log(1 + a u) for integer a >= 0."""
    if a == 0:
        zero = lambda u: 0.0
        return RadialPotential(zero, zero, zero, ("log_shift", 0), Fraction(0), True)
    return RadialPotential(
        h=lambda u: math.log(1 + a * u),
        dh=lambda u: a / (1 + a * u),
        d2h=lambda u: -(a * a) / (1 + a * u) ** 2,
        key=("log_shift", a),
        fiber_boundary=Fraction(1),
    )


def potential_log_R(n: int) -> RadialPotential:
    """h(u) = log R(u); the driver of all curvature corrections."""
    if n == 0:
        zero = lambda u: 0.0
        return RadialPotential(zero, zero, zero, ("logR_pot", 0), Fraction(0), True)
    return RadialPotential(
        h=lambda u: math.log((1 + (n + 1) * u) / (1 + u)),
        dh=lambda u: (n + 1) / (1 + (n + 1) * u) - 1 / (1 + u),
        d2h=lambda u: 1 / (1 + u) ** 2 - (n + 1) ** 2 / (1 + (n + 1) * u) ** 2,
        key=("logR_pot", n),
        fiber_boundary=Fraction(0),
    )


def potential_R(n: int) -> RadialPotential:
    """h(u) = R(u) itself (enters the curvature image of the degree-2 relation)."""
    return RadialPotential(
        h=lambda u: (1 + (n + 1) * u) / (1 + u),
        dh=lambda u: n / (1 + u) ** 2,
        d2h=lambda u: -2 * n / (1 + u) ** 3,
        key=("R_pot", n),
        fiber_boundary=Fraction(0),
        is_zero=(n == 0),
    )


# ---------------------------------------------------------------------------
# (1,1)-forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Form11:
    """Invariant (1,1)-form: fx * base + fphi * phi at a normal-frame point.

    fiber_integral is the exact half-line mass of fphi (i.e. the fiber
    pushforward) when known.  parts records a decomposition into primitive
    catalog forms with rational weights, used to resolve exact wedge totals.
    """

    n: int
    fx: RadialFunction
    fphi: RadialFunction
    key: KeyT
    fiber_integral: Optional[Fraction] = None
    is_closed: bool = False
    is_exact_ddc: bool = False
    parts: Optional[Tuple[Tuple[Fraction, "Form11"], ...]] = None

    @property
    def is_zero_form(self) -> bool:
        return self.fx.is_zero and self.fphi.is_zero

    @property
    def is_pure_base(self) -> bool:
        return self.fphi.is_zero and self.fx.const_value is not None

    def terms(self) -> Tuple[Tuple[Fraction, "Form11"], ...]:
        return self.parts if self.parts is not None else ((Fraction(1), self),)

    def evaluate(self, u: float) -> Tuple[float, float]:
        return self.fx(u), self.fphi(u)


def zero_form11(n: int) -> Form11:
    return Form11(n, RADIAL_ZERO, RADIAL_ZERO, key=("zero11",),
                  fiber_integral=Fraction(0), is_closed=True, is_exact_ddc=True)


def combine(n: int, weighted: Sequence[Tuple[Fraction, Form11]]) -> Form11:
    """Canonical rational linear combination, flattened to primitive parts."""
    flat: Dict[KeyT, Tuple[Fraction, Form11]] = {}
    for coeff, form in weighted:
        coeff = Fraction(coeff)
        if form.n != n:
            raise ValueError("mixed ruling indices in linear combination")
        if coeff == 0 or form.is_zero_form:
            continue
        for c, prim in form.terms():
            acc = flat.get(prim.key)
            total = (acc[0] if acc else Fraction(0)) + coeff * c
            flat[prim.key] = (total, prim)
    items = [(c, p) for c, p in (flat[k] for k in sorted(flat, key=repr)) if c != 0]
    if not items:
        return zero_form11(n)
    if len(items) == 1 and items[0][0] == 1:
        return items[0][1]
    fx = RADIAL_ZERO
    fphi = RADIAL_ZERO
    fiber: Optional[Fraction] = Fraction(0)
    closed = True
    exact = True
    for c, p in items:
        fx = radial_add(fx, radial_scale(c, p.fx))
        fphi = radial_add(fphi, radial_scale(c, p.fphi))
        fiber = None if (fiber is None or p.fiber_integral is None) \
            else fiber + c * p.fiber_integral
        closed = closed and p.is_closed
        exact = exact and p.is_exact_ddc
    parts = tuple((c, p) for c, p in items)
    key = ("lin",) + tuple((str(c), p.key) for c, p in items)
    return Form11(n, fx, fphi, key=key, fiber_integral=fiber,
                  is_closed=closed, is_exact_ddc=exact, parts=parts)


def scale11(c, form: Form11) -> Form11:
    return combine(form.n, [(Fraction(c), form)])


def add11(a: Form11, b: Form11) -> Form11:
    return combine(a.n, [(Fraction(1), a), (Fraction(1), b)])


def sub11(a: Form11, b: Form11) -> Form11:
    return combine(a.n, [(Fraction(1), a), (Fraction(-1), b)])


def smul11(rad: RadialFunction, form: Form11) -> Form11:
    """Multiply a (1,1)-form by a radial 0-form.

    Over a linear combination the product distributes into a decomposition of
    primitive smul parts, so downstream normal forms do not depend on whether
    the weight was applied before or after combining.
    """
    if rad.is_zero or form.is_zero_form:
        return zero_form11(form.n)
    if rad.const_value is not None:
        return scale11(rad.const_value, form)
    fiber = Fraction(0) if form.fphi.is_zero else None
    parts = None
    if form.parts is not None:
        parts = tuple((q, smul11(rad, p)) for q, p in form.parts)
    return Form11(form.n, radial_mul(rad, form.fx), radial_mul(rad, form.fphi),
                  key=("smul", rad.key, form.key), fiber_integral=fiber,
                  parts=parts)


# -- named constructors ------------------------------------------------------


def alpha_form(n: int) -> Form11:
    """Curvature of the tautological bundle: fx = (1+(n+1)u)/(1+u), fphi = 1/(1+u)^2."""
    if n < 0:
        raise ValueError("ruling index must be >= 0")
    return Form11(n, coeff_A(n), coeff_B(), key=("alpha",),
                  fiber_integral=Fraction(1), is_closed=True)


def base_form(n: int) -> Form11:
    """Pullback of the base Fubini-Study form (unit base mass, no fiber part)."""
    return Form11(n, RADIAL_ONE, RADIAL_ZERO, key=("x",),
                  fiber_integral=Fraction(0), is_closed=True)


def ratio_base_form(n: int) -> Form11:
    """R(u) * base: the curvature bracket term of the degree-2 relation."""
    return Form11(n, ratio_R(n), RADIAL_ZERO, key=("Rx",), fiber_integral=Fraction(0))


def omega_form(n: int) -> Form11:
    """Relative Fubini-Study form: the pure fiber form (0, 1/(1+u)^2).

    Equal to alpha minus R(u) * base; the decomposition is attached so exact
    wedge totals distribute, and the direct coefficients keep the fiber
    pushforward 1 manifest (an independent check of the sign convention).
    """
    parts = ((Fraction(1), alpha_form(n)), (Fraction(-1), ratio_base_form(n)))
    return Form11(n, RADIAL_ZERO, coeff_B(), key=("Omega",),
                  fiber_integral=Fraction(1), parts=parts)


def ddc_potential(h: RadialPotential, n: int) -> Form11:
    """dd^c of a radial potential by the normal-frame chain rule."""
    if h.is_zero:
        return zero_form11(n)
    dh, d2h = h.dh, h.d2h
    fx = RadialFunction(lambda u: n * u * dh(u), decay_order=0.0,
                        key=("ddc_fx", h.key, n),
                        const_value=Fraction(0) if n == 0 else None)
    fphi = RadialFunction(lambda u: dh(u) + u * d2h(u), decay_order=2.0,
                          key=("ddc_fphi", h.key))
    return Form11(n, fx, fphi, key=("ddc", h.key), fiber_integral=h.fiber_boundary,
                  is_closed=True, is_exact_ddc=True)


def ddc_log_R(n: int) -> Form11:
    return ddc_potential(potential_log_R(n), n)


def bott_chern_c2(n: int) -> Form11:
    """Secondary class of the two fibration metrics: pure base form, no fiber part."""
    if n == 0:
        return zero_form11(0)
    fx = RadialFunction(lambda u: n / (1 + (n + 1) * u) - n / (1 + u),
                        decay_order=1.0, key=("bc_fx", n))
    return Form11(n, fx, RADIAL_ZERO, key=("bc_c2",), fiber_integral=Fraction(0))


def c1_rel(n: int) -> Form11:
    """First Chern form of the relative tangent bundle: 2*alpha - (n+2)*base."""
    return combine(n, [(Fraction(2), alpha_form(n)), (Fraction(-(n + 2)), base_form(n))])


def c1_total(n: int) -> Form11:
    """First Chern form of the full tangent bundle: 2*alpha - n*base - dd^c log R."""
    return combine(n, [(Fraction(2), alpha_form(n)), (Fraction(-n), base_form(n)),
                       (Fraction(-1), ddc_log_R(n))])


def degree2_relation_rhs(n: int) -> Form11:
    """Analytic side of the degree-2 ring relation: alpha - (n+1)*base - R*base."""
    return combine(n, [(Fraction(1), alpha_form(n)),
                       (Fraction(-(n + 1)), base_form(n)),
                       (Fraction(-1), ratio_base_form(n))])


def omega_H(n: int) -> Form11:
    """Harmonic representative of the pulled-back base class."""
    return combine(n, [(Fraction(1), base_form(n)),
                       (Fraction(-1, n + 2), ddc_log_R(n))])


# ---------------------------------------------------------------------------
# (2,2)-forms and wedges
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Form22:
    """Invariant top form g(u) * base ^ phi; total integral = half-line mass of g.

    parts, when present, decomposes the form into wedges of primitive factors
    (zero wedges already dropped), the canonical shape for ring normal forms.
    """

    n: int
    g: RadialFunction
    key: KeyT
    total_integral: Optional[Fraction] = None
    parts: Optional[Tuple[Tuple[Fraction, "Form22"], ...]] = None

    @property
    def is_zero_form(self) -> bool:
        return self.g.is_zero

    def terms(self) -> Tuple[Tuple[Fraction, "Form22"], ...]:
        return self.parts if self.parts is not None else ((Fraction(1), self),)

    def integrate(self, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
        return integrate_halfline(self.g, cfg)


def zero_form22(n: int) -> Form22:
    return Form22(n, RADIAL_ZERO, key=("zero22",), total_integral=Fraction(0))


def scale22(c, w: Form22) -> Form22:
    c = Fraction(c)
    if c == 0 or w.is_zero_form:
        return zero_form22(w.n)
    if c == 1:
        return w
    total = None if w.total_integral is None else c * w.total_integral
    return Form22(w.n, radial_scale(c, w.g), key=("scale22", str(c), w.key),
                  total_integral=total)


def add22(a: Form22, b: Form22) -> Form22:
    if a.n != b.n:
        raise ValueError("mixed ruling indices")
    if a.is_zero_form:
        return b
    if b.is_zero_form:
        return a
    total = None if (a.total_integral is None or b.total_integral is None) \
        else a.total_integral + b.total_integral
    ka, kb = sorted((a.key, b.key), key=repr)
    return Form22(a.n, radial_add(a.g, b.g), key=("add22", ka, kb), total_integral=total)


def smul22(rad: RadialFunction, w: Form22) -> Form22:
    if rad.is_zero or w.is_zero_form:
        return zero_form22(w.n)
    if rad.const_value is not None:
        return scale22(rad.const_value, w)
    parts = None
    if w.parts is not None:
        parts = tuple((q, smul22(rad, p)) for q, p in w.parts)
    return Form22(w.n, radial_mul(rad, w.g), key=("smul22", rad.key, w.key),
                  parts=parts)


def _registered_pair_total(n: int, ka: KeyT, kb: KeyT) -> Optional[Fraction]:
    pair = tuple(sorted((ka, kb), key=repr))
    if pair == (("alpha",), ("alpha",)):
        return Fraction(n + 2)
    if pair == (("Rx",), ("alpha",)):
        # integral of R(u)/(1+u)^2 = (n+1) - n/2 by partial fractions
        return Fraction(n + 2, 2)
    return None


def _pair_total(a: Form11, b: Form11) -> Optional[Fraction]:
    """Exact wedge total for primitive factors, by structural rule or registry."""
    if a.is_zero_form or b.is_zero_form:
        return Fraction(0)
    if a.is_pure_base:
        return None if b.fiber_integral is None else a.fx.const_value * b.fiber_integral
    if b.is_pure_base:
        return None if a.fiber_integral is None else b.fx.const_value * a.fiber_integral
    closed_a = a.is_closed or a.is_exact_ddc
    closed_b = b.is_closed or b.is_exact_ddc
    if (a.is_exact_ddc and closed_b) or (b.is_exact_ddc and closed_a):
        return Fraction(0)  # Stokes against a closed form; decaying potentials
    return _registered_pair_total(a.n, a.key, b.key)


def _wedge_total(a: Form11, b: Form11) -> Optional[Fraction]:
    direct = _pair_total(a, b)
    if direct is not None:
        return direct
    if a.parts is None and b.parts is None:
        return None
    total = Fraction(0)
    for ca, pa in a.terms():
        for cb, pb in b.terms():
            t = _pair_total(pa, pb)
            if t is None:
                return None
            total += ca * cb * t
    return total


def wedge(a: Form11, b: Form11) -> Form22:
    """Wedge of invariant (1,1)-forms: g = a.fx*b.fphi + a.fphi*b.fx."""
    if a.n != b.n:
        raise ValueError(f"wedge of forms with different ruling indices {a.n} != {b.n}")
    if a.is_zero_form or b.is_zero_form:
        return zero_form22(a.n)
    g = radial_add(radial_mul(a.fx, b.fphi), radial_mul(a.fphi, b.fx))
    parts = None
    if a.parts is not None or b.parts is not None:
        collected: Dict[KeyT, Tuple[Fraction, Form22]] = {}
        for ca, pa in a.terms():
            for cb, pb in b.terms():
                w = wedge(pa, pb)
                if w.is_zero_form:
                    continue
                prev = collected.get(w.key)
                total = (prev[0] if prev else Fraction(0)) + ca * cb
                collected[w.key] = (total, w)
        parts = tuple((c, w) for c, w in
                      (collected[k] for k in sorted(collected, key=repr)) if c != 0)
        if not parts:
            return zero_form22(a.n)
    ka, kb = sorted((a.key, b.key), key=repr)
    return Form22(a.n, g, key=("wedge", ka, kb), total_integral=_wedge_total(a, b),
                  parts=parts)


def volume_form(n: int) -> Form22:
    """Volume form alpha^2 / 2; total (n+2)/2."""
    return scale22(Fraction(1, 2), wedge(alpha_form(n), alpha_form(n)))


# ---------------------------------------------------------------------------
# Contraction, Hodge star, L2 pairings
# ---------------------------------------------------------------------------


def lambda_contract(a: Form11) -> RadialFunction:
    """Trace against the reference metric: fx/A + fphi/B pointwise."""
    return radial_add(radial_mul(a.fx, reciprocal_A(a.n)),
                      radial_mul(a.fphi, reciprocal_B()))


def hodge_star(a: Form11) -> Form11:
    """Star on real invariant (1,1)-forms: (Lambda a) * alpha - a."""
    lam = lambda_contract(a)
    al = alpha_form(a.n)
    fx = radial_add(radial_mul(lam, al.fx), radial_scale(-1, a.fx))
    fphi = radial_add(radial_mul(lam, al.fphi), radial_scale(-1, a.fphi))
    return Form11(a.n, fx, fphi, key=("star", a.key))


def l2_inner(a: Form11, b: Form11, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """L2 pairing: integral of a ^ star(b) over the surface."""
    if a.n != b.n:
        raise ValueError("mixed ruling indices in inner product")
    return wedge(a, hodge_star(b)).integrate(cfg)


def l2_inner_top(v: Form22, w: Form22, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """L2 pairing of top forms: star of g * dV is the scalar g, so the pairing
    is the half-line integral of v.g * w.g / (A * B)."""
    if v.n != w.n:
        raise ValueError("mixed ruling indices in inner product")
    integrand = radial_mul(radial_mul(v.g, w.g),
                           radial_mul(reciprocal_A(v.n), reciprocal_B()))
    return integrate_halfline(integrand, cfg)


def pushforward_fiber(obj, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Fiber pushforward by quadrature.

    For a (1,1)-form: the constant value of the resulting function on the
    base (the half-line mass of fphi).  For a top form: the coefficient c
    with pushforward = c * base.
    """
    if isinstance(obj, Form11):
        return integrate_halfline(obj.fphi, cfg)
    if isinstance(obj, Form22):
        return integrate_halfline(obj.g, cfg)
    raise TypeError(f"cannot push forward {type(obj).__name__}")


def pushforward_fiber_exact(obj) -> Optional[Fraction]:
    if isinstance(obj, Form11):
        return obj.fiber_integral
    if isinstance(obj, Form22):
        return obj.total_integral
    raise TypeError(f"no exact pushforward for {type(obj).__name__}")


# ---------------------------------------------------------------------------
# dd^c lookup (for products of analytic ring classes)
# ---------------------------------------------------------------------------


def ddc_of_radial(rad: RadialFunction, n: int) -> Optional[Form11]:
    """dd^c of a radial 0-form when cataloged; None when unknown."""
    if rad.const_value is not None:
        return zero_form11(n)
    kind = rad.key[0] if rad.key else None
    if kind == "logR":
        return ddc_log_R(n)
    if kind == "R":
        return ddc_potential(potential_R(n), n)
    return None


def ddc_of_form11(form: Form11, n: int) -> Optional[List[Tuple[Fraction, Form22]]]:
    """dd^c of a cataloged (1,1)-form as weighted top-form parts.

    An empty list means a known-zero dd^c (closed or exact forms); None means
    the derivative is not cataloged.  Rational weights stay outside the form
    objects so that identical parts built along different routes share keys.
    """
    if form.is_zero_form or form.is_closed or form.is_exact_ddc:
        return []
    if form.key == ("Rx",):
        return [(Fraction(1), wedge(ddc_potential(potential_R(n), n), base_form(n)))]
    if form.parts is not None:
        out: List[Tuple[Fraction, Form22]] = []
        for c, p in form.terms():
            d = ddc_of_form11(p, n)
            if d is None:
                return None
            out.extend((c * q, w) for q, w in d)
        return out
    return None


# ---------------------------------------------------------------------------
# Quotient metric check
# ---------------------------------------------------------------------------


def quotient_vector_norm_sq(n: int, u: float, scale: float = 1.0) -> float:
    """Squared norm of the adjoint image of (scale * d/dz) in the fiber direction.

    Assembled literally from the adjoint formula at a normal-frame point:
    the vector (-conj(z) e1 + e2)/(1+|z|^2) tensored with the dual of the
    defining point e1 + z e2, with both frame vectors of unit length.
    """
    z = math.sqrt(u)  # unitary invariance: a real slice suffices
    comp1, comp2 = -z * scale, 1.0 * scale
    numerator_norm_sq = comp1 * comp1 + comp2 * comp2
    point_norm_sq = 1.0 + z * z
    dual_factor = 1.0 / point_norm_sq
    return (numerator_norm_sq / point_norm_sq ** 2) * dual_factor


def quotient_metric_ratio_check(n: int, u_values: Iterable[float],
                                tol: float = 1e-10) -> List[VerificationEntry]:
    """Pointwise ratio of the quotient metric to the fiber part of alpha.

    The quotient metric coefficient must equal 1/(1+u)^2, i.e. 2*pi times the
    fiber coefficient of alpha (which carries a 1/(2*pi) normalization).
    """
    al = alpha_form(n)
    entries = []
    for u in u_values:
        metric_q = quotient_vector_norm_sq(n, u)
        metric_alpha = al.fphi(u) / TWO_PI
        ratio = metric_q / metric_alpha
        err = abs(ratio - TWO_PI)
        entries.append(VerificationEntry(
            name=f"quotient_metric_ratio[u={u:g}]", n=n, expected=None,
            expected_float=TWO_PI, computed=ratio, abs_error=err,
            passed=err <= tol, tol=tol))
    return entries


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def catalog(n: int) -> Dict[str, Form11]:
    """The named invariant (1,1)-forms, keyed for reporting and the CLI dump."""
    return {
        "alpha": alpha_form(n),
        "base_x": base_form(n),
        "omega_rel": omega_form(n),
        "ddc_log_ratio": ddc_log_R(n),
        "c1_tangent": c1_total(n),
        "c1_relative": c1_rel(n),
        "bott_chern_c2": bott_chern_c2(n),
        "omega_harmonic": omega_H(n),
        "degree2_relation_rhs": degree2_relation_rhs(n),
    }


def sample_catalog(n: int, u_values: Sequence[float]) -> List[Tuple[str, float, float, float]]:
    """Rows (form, u, fx, fphi) over a u-grid, in deterministic order."""
    rows = []
    for name, form in catalog(n).items():
        for u in u_values:
            fx, fphi = form.evaluate(u)
            rows.append((name, u, fx, fphi))
    return rows
