"""Graded arithmetic intersection classes for the ruled-surface model.

A class is a polynomial in the two arithmetic generators

    xhat   (base hyperplane, curvature the base Fubini-Study form)
    ahat   (tautological class, curvature alpha)

plus an analytic part: a finite list of a(coefficient * form) terms, where
the form is a cataloged radial 0-form, an invariant (1,1)-form, or a top
form, and the coefficient is an exact constant.  Classes live either on the
surface model (arithmetic dimension 3) or on the base projective-line model
(arithmetic dimension 2).

The rewrite system reduces every polynomial to the normal form with
exponents at most 1 in each generator:

    xhat^2            -> a(base form)
    ahat^2            -> (n+2) xhat ahat + a(alpha - (n+1) base - R * base)

with the analytic remainder wedged against the curvature image of whatever
monomial multiplies the relation.  Products of analytic terms use
a(eta) * a(eta') = a(dd^c eta ^ eta'); whenever either factor has a known
vanishing dd^c the product is taken to be zero (the representatives differ
by im d' + im d'', which every degree map kills), and the pairing is
flagged in the trace when it fires nontrivially.

The degree map halves the total integral of the top-degree analytic part;
no finite-place contributions are modeled, because every class produced by
the pipelines reduces to archimedean terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from . import forms
from .constants import ExactConstant, log_2pi
from .forms import Form11, Form22
from .radial import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    RADIAL_ONE,
    RadialFunction,
    integrate_halfline,
    radial_mul,
)

SURFACE = "S_n"
BASE = "P1"

MonoT = Tuple[int, int]  # exponents of (xhat, ahat)


class ChowError(Exception):
    """Base error for the intersection engine."""


class UnknownCurvature(ChowError):
    """A product needed dd^c of a form that is not cataloged."""


class IncompleteReduction(ChowError):
    """A top-degree class kept a non-analytic monomial after rewriting."""


class MissingExactIntegral(ChowError):
    """An exact pushforward hit a form with no registered closed-form mass."""


class DegreeOverflow(ChowError):
    """A polynomial product exceeded the arithmetic dimension."""


class PipelineInconsistency(ChowError):
    """An internal identity of the pipelines failed to hold exactly."""


@dataclass(frozen=True, eq=False)
class BaseTopForm:
    """The base Fubini-Study form viewed as the top form of the base model."""

    n: int
    profile: RadialFunction
    key: Tuple = ("xP1",)
    total_integral: Fraction = Fraction(1)

    @property
    def is_zero_form(self) -> bool:
        return False


def base_top_form(n: int) -> BaseTopForm:
    return BaseTopForm(n=n, profile=forms.coeff_B())


FormT = Union[RadialFunction, Form11, Form22, BaseTopForm]


def _ec(value) -> ExactConstant:
    if isinstance(value, ExactConstant):
        return value
    return ExactConstant.rational(value)


def _form_is_zero(form: FormT) -> bool:
    if isinstance(form, RadialFunction):
        return form.is_zero
    return form.is_zero_form


def _form_degree(form: FormT, variety: str) -> int:
    if isinstance(form, RadialFunction):
        return 1
    if isinstance(form, Form11):
        return 2
    if isinstance(form, Form22):
        return 3
    if isinstance(form, BaseTopForm):
        return 2
    raise TypeError(f"not a catalog form: {type(form).__name__}")


def _form_key(form: FormT) -> Tuple:
    return form.key


def _render_mono(mono: MonoT) -> str:
    i, j = mono
    bits = []
    if i:
        bits.append("xhat" + (f"^{i}" if i > 1 else ""))
    if j:
        bits.append("ahat" + (f"^{j}" if j > 1 else ""))
    return "*".join(bits) or "1"


# ---------------------------------------------------------------------------
# The class type
# ---------------------------------------------------------------------------


class ChowClass:
    """Immutable normalized class: polynomial part plus analytic a(...) terms."""

    __slots__ = ("n", "variety", "poly", "analytic")

    def __init__(self, n: int, variety: str,
                 poly: Optional[Dict[MonoT, ExactConstant]] = None,
                 analytic: Optional[Iterable[Tuple[ExactConstant, FormT]]] = None):
        if variety not in (SURFACE, BASE):
            raise ValueError(f"unknown variety tag {variety!r}")
        self.n = n
        self.variety = variety
        norm_poly: Dict[MonoT, ExactConstant] = {}
        for mono, coeff in (poly or {}).items():
            coeff = _ec(coeff)
            if variety == BASE and mono[1]:
                raise ValueError("the base model has no tautological generator")
            if not coeff.is_zero:
                prev = norm_poly.get(mono)
                coeff = coeff + prev if prev else coeff
                if coeff.is_zero:
                    norm_poly.pop(mono, None)
                else:
                    norm_poly[mono] = coeff
        self.poly = {m: norm_poly[m] for m in sorted(norm_poly)}
        merged: Dict[Tuple, Tuple[ExactConstant, FormT]] = {}
        for coeff, form in (analytic or []):
            coeff = _ec(coeff)
            if coeff.is_zero or _form_is_zero(form):
                continue
            # expand linear-combination forms into their primitive parts, so
            # identically assembled classes share one normal form
            if isinstance(form, (Form11, Form22)) and form.parts is not None:
                pieces = [(coeff * q, p) for q, p in form.parts]
            else:
                pieces = [(coeff, form)]
            for piece_coeff, piece_form in pieces:
                if piece_coeff.is_zero or _form_is_zero(piece_form):
                    continue
                slot = (_form_degree(piece_form, variety), _form_key(piece_form))
                if slot in merged:
                    prev_coeff, prev_form = merged[slot]
                    total = prev_coeff + piece_coeff
                    if total.is_zero:
                        del merged[slot]
                    else:
                        merged[slot] = (total, prev_form)
                else:
                    merged[slot] = (piece_coeff, piece_form)
        self.analytic = tuple((merged[s][0], merged[s][1])
                              for s in sorted(merged, key=repr))

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.poly and not self.analytic

    def degrees(self) -> List[int]:
        out = {i + j for (i, j) in self.poly}
        out.update(_form_degree(f, self.variety) for _, f in self.analytic)
        return sorted(out)

    def degree_part(self, k: int) -> "ChowClass":
        poly = {m: c for m, c in self.poly.items() if sum(m) == k}
        analytic = [(c, f) for c, f in self.analytic
                    if _form_degree(f, self.variety) == k]
        return ChowClass(self.n, self.variety, poly, analytic)

    def analytic_terms(self, degree: Optional[int] = None):
        if degree is None:
            return list(self.analytic)
        return [(c, f) for c, f in self.analytic
                if _form_degree(f, self.variety) == degree]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        if (self.n, self.variety) != (other.n, other.variety):
            return False
        if self.poly != other.poly:
            return False
        mine = {(_form_degree(f, self.variety), _form_key(f)): c for c, f in self.analytic}
        theirs = {(_form_degree(f, other.variety), _form_key(f)): c for c, f in other.analytic}
        return mine == theirs

    def __repr__(self) -> str:
        poly = " + ".join(f"({c})*{_render_mono(m)}" for m, c in self.poly.items())
        ana = " + ".join(f"a(({c})*{_form_key(f)!r})" for c, f in self.analytic)
        body = " + ".join(p for p in (poly, ana) if p) or "0"
        return f"ChowClass[{self.variety}, n={self.n}]({body})"


# -- builders ----------------------------------------------------------------


def zero_class(n: int, variety: str = SURFACE) -> ChowClass:
    return ChowClass(n, variety)


def unit(n: int, variety: str = SURFACE) -> ChowClass:
    return ChowClass(n, variety, {(0, 0): _ec(1)})


def gen_x(n: int, variety: str = SURFACE) -> ChowClass:
    return ChowClass(n, variety, {(1, 0): _ec(1)})


def gen_alpha(n: int) -> ChowClass:
    return ChowClass(n, SURFACE, {(0, 1): _ec(1)})


def a_class(n: int, coeff, form: FormT, variety: str = SURFACE) -> ChowClass:
    return ChowClass(n, variety, analytic=[(_ec(coeff), form)])


def add(a: ChowClass, b: ChowClass) -> ChowClass:
    _check_compatible(a, b)
    poly = dict(a.poly)
    for m, c in b.poly.items():
        poly[m] = poly.get(m, _ec(0)) + c
    return ChowClass(a.n, a.variety, poly, list(a.analytic) + list(b.analytic))


def scale(q, a: ChowClass) -> ChowClass:
    q = _ec(q)
    return ChowClass(a.n, a.variety,
                     {m: c * q for m, c in a.poly.items()},
                     [(c * q, f) for c, f in a.analytic])


def sub(a: ChowClass, b: ChowClass) -> ChowClass:
    return add(a, scale(-1, b))


def _check_compatible(a: ChowClass, b: ChowClass) -> None:
    if a.n != b.n or a.variety != b.variety:
        raise ChowError(f"incompatible classes: ({a.n},{a.variety}) vs ({b.n},{b.variety})")


# ---------------------------------------------------------------------------
# Curvature images and form products
# ---------------------------------------------------------------------------


def _wedge_forms(n: int, variety: str, f1: FormT, f2: FormT) -> Optional[FormT]:
    """Wedge of catalog forms; None when the product vanishes or exceeds top degree."""
    if _form_is_zero(f1) or _form_is_zero(f2):
        return None
    if isinstance(f1, RadialFunction) and isinstance(f2, RadialFunction):
        out = radial_mul(f1, f2)
        return None if out.is_zero else out
    if isinstance(f2, RadialFunction):
        f1, f2 = f2, f1
    if isinstance(f1, RadialFunction):
        if isinstance(f2, Form11):
            out11 = forms.smul11(f1, f2)
            return None if out11.is_zero_form else out11
        if isinstance(f2, Form22):
            out22 = forms.smul22(f1, f2)
            return None if out22.is_zero_form else out22
        if isinstance(f2, BaseTopForm):
            if f1.const_value is None:
                raise UnknownCurvature("non-constant 0-form on the base model")
            if f1.const_value == 1:
                return f2
            return BaseTopForm(n=n, profile=radial_mul(f1, f2.profile),
                               key=("scale_xP1", str(f1.const_value)),
                               total_integral=f1.const_value * f2.total_integral)
    if isinstance(f1, Form11) and isinstance(f2, Form11):
        out = forms.wedge(f1, f2)
        return None if out.is_zero_form else out
    # anything past the top degree of either model vanishes
    return None


def _mono_curvature(n: int, variety: str, mono: MonoT) -> Optional[FormT]:
    """Curvature image of a generator monomial (None when it vanishes)."""
    i, j = mono
    if variety == BASE:
        if i == 0:
            return RADIAL_ONE
        if i == 1:
            return base_top_form(n)
        return None
    acc: Optional[FormT] = RADIAL_ONE
    for _ in range(i):
        acc = None if acc is None else _wedge_forms(n, variety, acc, forms.base_form(n))
    for _ in range(j):
        acc = None if acc is None else _wedge_forms(n, variety, acc, forms.alpha_form(n))
    return acc


def _ddc_of(form: FormT, n: int) -> Optional[List[Tuple[Fraction, FormT]]]:
    """dd^c of an analytic term's form as weighted parts.

    An empty list is a known-zero dd^c; None means unknown.  Weights are kept
    outside the form objects so keys stay canonical.
    """
    if isinstance(form, RadialFunction):
        d = forms.ddc_of_radial(form, n)
        if d is None:
            return None
        return [] if d.is_zero_form else [(Fraction(1), d)]
    if isinstance(form, Form11):
        return forms.ddc_of_form11(form, n)
    return []  # top forms


def omega_image(c: ChowClass) -> List[Tuple[ExactConstant, FormT]]:
    """Curvature image of a class: generator curvatures plus dd^c of a-parts."""
    out: List[Tuple[ExactConstant, FormT]] = []
    for mono, coeff in c.poly.items():
        form = _mono_curvature(c.n, c.variety, mono)
        if form is not None:
            out.append((coeff, form))
    for coeff, form in c.analytic:
        d = _ddc_of(form, c.n)
        if d is None:
            raise UnknownCurvature(f"dd^c of {_form_key(form)!r} is not cataloged")
        for q, part in d:
            out.append((coeff * q, part))
    return out


# ---------------------------------------------------------------------------
# Rewriting
# ---------------------------------------------------------------------------


def _trace_step(trace, rule: str, before: str, after: str) -> None:
    if trace is not None:
        trace.append({"rule": rule, "before": before, "after": after})


def reduce(c: ChowClass, trace: Optional[list] = None) -> ChowClass:
    """Normal form: exponents at most 1, relations pushed into analytic terms."""
    out_poly: Dict[MonoT, ExactConstant] = {}
    analytic: List[Tuple[ExactConstant, FormT]] = list(c.analytic)
    stack: List[Tuple[MonoT, ExactConstant]] = list(c.poly.items())
    eta2 = forms.degree2_relation_rhs(c.n) if c.variety == SURFACE else None
    while stack:
        (i, j), coeff = stack.pop()
        if coeff.is_zero:
            continue
        if c.variety == SURFACE and j >= 2:
            stack.append(((i + 1, j - 1), coeff * Fraction(c.n + 2)))
            rest = _mono_curvature(c.n, c.variety, (i, j - 2))
            if rest is not None:
                w = _wedge_forms(c.n, c.variety, eta2, rest)
                if w is not None:
                    analytic.append((coeff, w))
            _trace_step(trace, "alpha_square", _render_mono((i, j)),
                        f"({c.n}+2)*{_render_mono((i + 1, j - 1))} "
                        f"+ a(relation_rhs*{_render_mono((i, j - 2))})")
        elif i >= 2:
            rest = _mono_curvature(c.n, c.variety, (i - 2, j))
            if rest is not None:
                base = base_top_form(c.n) if c.variety == BASE else forms.base_form(c.n)
                w = _wedge_forms(c.n, c.variety, base, rest)
                if w is not None:
                    analytic.append((coeff, w))
            _trace_step(trace, "x_square", _render_mono((i, j)),
                        f"a(base*{_render_mono((i - 2, j))})")
        else:
            prev = out_poly.get((i, j))
            out_poly[(i, j)] = coeff + prev if prev else coeff
    out = ChowClass(c.n, c.variety, out_poly, analytic)
    # Canonicalize a(alpha ^ alpha): the degree-2 relation makes it cohomologous
    # to (n+2) a(base ^ alpha) (the discrepancy is dd^c of the relation form,
    # which a(.) kills), so differently associated products share a normal form.
    # Runs after construction so parts-expanded wedges are covered too.
    alpha_sq_key = ("wedge", ("alpha",), ("alpha",))
    if any(isinstance(f, Form22) and f.key == alpha_sq_key for _, f in out.analytic):
        normalized: List[Tuple[ExactConstant, FormT]] = []
        for coeff, form in out.analytic:
            if isinstance(form, Form22) and form.key == alpha_sq_key:
                _trace_step(trace, "alpha_square_analytic", "a(alpha^alpha)",
                            f"({c.n}+2)*a(base^alpha)")
                normalized.append((coeff * Fraction(c.n + 2),
                                   forms.wedge(forms.base_form(c.n),
                                               forms.alpha_form(c.n))))
            else:
                normalized.append((coeff, form))
        out = ChowClass(c.n, c.variety, dict(out.poly), normalized)
    return out


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


def mul(a: ChowClass, b: ChowClass, trace: Optional[list] = None) -> ChowClass:
    """Intersection product followed by reduction to normal form.

    Monomial products beyond the arithmetic dimension are rejected up front
    (before rewriting could silently absorb them).
    """
    _check_compatible(a, b)
    top = 3
    for m1 in a.poly:
        for m2 in b.poly:
            if sum(m1) + sum(m2) > top:
                raise DegreeOverflow(
                    f"monomial {_render_mono((m1[0] + m2[0], m1[1] + m2[1]))} "
                    f"exceeds the arithmetic dimension")
    a = reduce(a, trace)
    b = reduce(b, trace)
    poly: Dict[MonoT, ExactConstant] = {}
    analytic: List[Tuple[ExactConstant, FormT]] = []
    for (i1, j1), c1 in a.poly.items():
        for (i2, j2), c2 in b.poly.items():
            mono = (i1 + i2, j1 + j2)
            coeff = c1 * c2
            prev = poly.get(mono)
            poly[mono] = coeff + prev if prev else coeff
    for left, right in ((a, b), (b, a)):
        for coeff_f, form in left.analytic:
            for mono, coeff_m in right.poly.items():
                curv = _mono_curvature(a.n, a.variety, mono)
                if curv is None:
                    continue
                w = _wedge_forms(a.n, a.variety, form, curv)
                if w is not None:
                    analytic.append((coeff_f * coeff_m, w))
    for c1, f1 in a.analytic:
        for c2, f2 in b.analytic:
            # canonical factor order makes the representative independent of
            # which operand carried which term
            if repr(_form_key(f1)) > repr(_form_key(f2)):
                g1, g2 = f2, f1
            else:
                g1, g2 = f1, f2
            d1 = _ddc_of(g1, a.n)
            d2 = _ddc_of(g2, a.n)
            if d1 == [] or d2 == []:
                continue  # either factor is dd^c-closed: the product class is 0
            if d1 is not None:
                parts = [(q, _wedge_forms(a.n, a.variety, df, g2)) for q, df in d1]
            elif d2 is not None:
                parts = [(q, _wedge_forms(a.n, a.variety, df, g1)) for q, df in d2]
            else:
                raise UnknownCurvature(
                    f"product a({_form_key(g1)!r})*a({_form_key(g2)!r}) needs an "
                    "uncataloged dd^c")
            for q, w in parts:
                if w is not None:
                    analytic.append((c1 * c2 * q, w))
                    _trace_step(trace, "analytic_product",
                                f"a({_form_key(g1)!r})*a({_form_key(g2)!r})",
                                f"a({_form_key(w)!r})")
    return reduce(ChowClass(a.n, a.variety, poly, analytic), trace)


# ---------------------------------------------------------------------------
# Pushforwards and the degree map
# ---------------------------------------------------------------------------


def pushforward_base(c: ChowClass, trace: Optional[list] = None) -> ChowClass:
    """Pushforward along the ruling, from the surface model to the base model."""
    if c.variety != SURFACE:
        raise ChowError("pushforward_base expects a surface class")
    c = reduce(c, trace)
    poly: Dict[MonoT, ExactConstant] = {}
    analytic: List[Tuple[ExactConstant, FormT]] = []
    for (i, j), coeff in c.poly.items():
        if j == 0:
            continue  # pullback monomials push to zero
        mono = (i, 0)  # projection formula; fiber degree of alpha is 1
        prev = poly.get(mono)
        poly[mono] = coeff + prev if prev else coeff
    for coeff, form in c.analytic:
        if isinstance(form, RadialFunction):
            continue  # 0-forms push to degree -2
        if isinstance(form, Form11):
            if form.fiber_integral is None:
                raise MissingExactIntegral(
                    f"fiber integral of {_form_key(form)!r} is not registered")
            analytic.append((coeff * form.fiber_integral, RADIAL_ONE))
        elif isinstance(form, Form22):
            if form.total_integral is None:
                raise MissingExactIntegral(
                    f"total integral of {_form_key(form)!r} is not registered")
            analytic.append((coeff * form.total_integral, base_top_form(c.n)))
        else:
            raise ChowError("unexpected form on the surface model")
    return ChowClass(c.n, BASE, poly, analytic)


def _top_degree(variety: str) -> int:
    return 3 if variety == SURFACE else 2


def pushforward_deg(c: ChowClass, trace: Optional[list] = None) -> ExactConstant:
    """Arithmetic degree of a top-degree class: half the exact total mass.

    Closed-form masses must be registered on every analytic term; there is no
    silent numerical fallback (pushforward_deg_numeric is the quadrature
    companion used for cross-checks).
    """
    c = reduce(c, trace)
    top = _top_degree(c.variety)
    if any(sum(m) != top for m in c.poly) or \
       any(_form_degree(f, c.variety) != top for _, f in c.analytic):
        raise ChowError("pushforward_deg expects a homogeneous top-degree class")
    if c.poly:
        raise IncompleteReduction(
            f"non-analytic monomials {list(c.poly)} survived reduction")
    total = ExactConstant.zero()
    for coeff, form in c.analytic:
        mass = form.total_integral
        if mass is None:
            raise MissingExactIntegral(
                f"total integral of {_form_key(form)!r} is not registered")
        total = total + coeff * mass
    return total.scale(Fraction(1, 2))


def pushforward_deg_numeric(c: ChowClass,
                            cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Quadrature twin of pushforward_deg (half the numerically integrated mass)."""
    c = reduce(c)
    top = _top_degree(c.variety)
    if c.degree_part(top).poly:
        raise IncompleteReduction("non-analytic monomials at top degree")
    total = 0.0
    for coeff, form in c.analytic_terms(top):
        profile = form.profile if isinstance(form, BaseTopForm) else form.g
        total += coeff.to_float() * integrate_halfline(profile, cfg)
    return 0.5 * total


# ---------------------------------------------------------------------------
# Characteristic classes and pipelines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChernClasses:
    """Arithmetic Chern classes of the metrized tangent bundles."""

    n: int
    c1_relative: ChowClass     # relative tangent bundle, curvature metric
    c1_base: ChowClass         # pulled-back base tangent bundle
    c1_tangent: ChowClass      # full tangent bundle
    c2_tangent: ChowClass


def arithmetic_chern_classes(n: int) -> ChernClasses:
    l2pi = log_2pi()
    alpha = gen_alpha(n)
    x = gen_x(n)
    log_ratio = forms.log_R(n)
    c1rel = add(sub(scale(2, alpha), scale(n + 2, x)),
                a_class(n, l2pi, RADIAL_ONE))
    c1base = add(scale(2, x),
                 ChowClass(n, SURFACE, analytic=[(_ec(-1), log_ratio),
                                                 (l2pi, RADIAL_ONE)]))
    c1tan = add(sub(scale(2, alpha), scale(n, x)),
                ChowClass(n, SURFACE, analytic=[(_ec(-1), log_ratio),
                                                (l2pi.scale(2), RADIAL_ONE)]))
    c2tan = ChowClass(
        n, SURFACE,
        poly={(1, 1): _ec(4), (2, 0): _ec(-2 * (n + 2))},
        analytic=[
            (l2pi.scale(2), forms.base_form(n)),
            (_ec(-1), forms.smul11(log_ratio, forms.c1_rel(n))),
            (l2pi, forms.c1_rel(n)),
            (_ec(-1), forms.bott_chern_c2(n)),
        ])
    return ChernClasses(n, c1rel, c1base, c1tan, c2tan)


def euler_sequence_chern(n: int) -> Tuple[ChowClass, ChowClass]:
    """Chern classes of the rank-2 bundle on the base: (1+x)(1+(n+1)x) split."""
    c1 = scale(n + 2, gen_x(n, BASE))
    c2 = ChowClass(n, BASE, {(2, 0): _ec(n + 1)})
    return c1, c2


def segre_classes(n: int, trace: Optional[list] = None) -> Tuple[ChowClass, ChowClass]:
    """Pushforward Segre classes of the twisted rank-2 bundle, on the base model.

    Assembled from the pushed-forward degree-2 relation, with the two
    secondary-form masses imported from the forms catalog:
    s1 = -(fiber mass of the relative Fubini-Study form) = -1, and the
    degree-2 mass  -(total of omega_rel ^ alpha) = -(n+2)/2.
    """
    s1_mass = -forms.pushforward_fiber_exact(forms.omega_form(n))
    if s1_mass != -1:
        raise PipelineInconsistency("fiber mass of the relative form must be 1")
    s2_mass = -forms.wedge(forms.omega_form(n), forms.alpha_form(n)).total_integral
    x = gen_x(n, BASE)
    s1p = add(scale(n + 2, x), a_class(n, -s1_mass, RADIAL_ONE, BASE))
    s2p = ChowClass(
        n, BASE,
        poly={(2, 0): _ec(n * n + 3 * n + 3)},
        analytic=[
            (_ec(-(n + 2) * s1_mass), base_top_form(n)),  # -(n+2) a(x * s1)
            (_ec(-s2_mass), base_top_form(n)),            # -a(s2 mass * x)
        ])
    return reduce(s1p, trace), reduce(s2p, trace)


def height_class(n: int, trace: Optional[list] = None) -> ChowClass:
    """alpha-hat cubed, the polarization cube whose degree is the height."""
    return reduce(ChowClass(n, SURFACE, {(0, 3): _ec(1)}), trace)


def c1c2_pushforward(n: int, trace: Optional[list] = None) -> ExactConstant:
    """Exact degree of the pushed-forward product c1*c2 of the tangent classes.

    The polynomial part goes through the rewrite engine; the analytic masses
    are the named closed-form integrals (torsion module) plus exact wedge
    totals from the forms catalog.  The assembled value is checked against
    the single closed form it must equal before being returned.
    """
    from . import torsion  # closed-form integral table; deferred to avoid a cycle

    poly_part = ChowClass(n, SURFACE, {(1, 2): _ec(8), (2, 1): _ec(-8 * (n + 1))})
    deg_poly = pushforward_deg(poly_part, trace)
    if deg_poly != _ec(8):
        raise PipelineInconsistency(f"polynomial contribution {deg_poly} != 8")

    l2pi = log_2pi()
    alpha_x = forms.wedge(forms.alpha_form(n), forms.base_form(n)).total_integral
    x_c1 = forms.wedge(forms.base_form(n), forms.c1_total(n)).total_integral
    c1_c1rel = forms.wedge(forms.c1_total(n), forms.c1_rel(n)).total_integral
    if None in (alpha_x, x_c1, c1_c1rel):
        raise MissingExactIntegral("catalog wedge totals for the c1*c2 assembly")
    j1 = torsion.closed_log_ratio_fiber_mass(n)
    i1 = torsion.closed_c1_c1rel_log_ratio(n)
    i2 = torsion.closed_c1_bott_chern(n)
    analytic_mass = (
        j1.scale(-4) + l2pi.scale(8 * alpha_x)   # (2 log 2pi - log R) * 4 alpha x
        + l2pi.scale(2 * x_c1)                   # 2 log 2pi * x ^ c1
        - i1 + l2pi.scale(c1_c1rel)              # -(log R - log 2pi) * c1 ^ c1rel
        - i2                                     # -c1 ^ secondary class
    )
    value = deg_poly + analytic_mass.scale(Fraction(1, 2))
    expected = (torsion.log_np1(n).scale(n) + _ec(-4 * n + 16)
                + l2pi.scale(16)).scale(Fraction(1, 2))
    if value != expected:
        raise PipelineInconsistency(
            f"c1*c2 degree {value} differs from its closed form {expected}")
    return value


def c1c2_product_class(n: int, trace: Optional[list] = None) -> ChowClass:
    """The generic rewrite-engine product c1*c2, for quadrature cross-checks."""
    cc = arithmetic_chern_classes(n)
    return mul(cc.c1_tangent, cc.c2_tangent, trace)


def torsion_form(n: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> ExactConstant:
    """Degree-0 part of the fibration torsion form, through the relative
    Todd pushforward; raises if the degree-2 part fails to vanish exactly."""
    from . import torsion  # R-genus constant lives with the torsion data

    cc = arithmetic_chern_classes(n)
    c1r = cc.c1_relative
    td = add(add(unit(n), scale(Fraction(1, 2), c1r)),
             scale(Fraction(1, 12), mul(c1r, c1r)))
    pushed = pushforward_base(td)

    r_class = a_class(n, torsion.R_GENUS_DEGREE1, forms.c1_rel(n))
    r_pushed = pushforward_base(mul(td, r_class))

    result = sub(sub(pushed, r_pushed), unit(n, BASE))
    if result.poly:
        raise PipelineInconsistency(
            f"torsion form kept polynomial terms {list(result.poly)}")
    degree2 = result.analytic_terms(2)
    if degree2:
        raise PipelineInconsistency(
            f"degree-2 part of the torsion form did not vanish: {degree2}")
    rel_sq = forms.wedge(forms.c1_rel(n), forms.c1_rel(n))
    residue = rel_sq.integrate(cfg)
    if abs(residue) > cfg.pass_tol:
        raise PipelineInconsistency(
            f"quadrature of the squared relative class is {residue:.3e}, not 0")
    value = ExactConstant.zero()
    for coeff, form in result.analytic_terms(1):
        if not isinstance(form, RadialFunction) or form.const_value != 1:
            raise PipelineInconsistency("degree-1 part is not a constant multiple")
        value = value + coeff
    return value
