"""Ring engine: rewriting, products, pushforwards, characteristic pipelines."""

import json
import random
from fractions import Fraction

import pytest

from hirzebruch_torsion import chow, forms
from hirzebruch_torsion.chow import (
    BASE,
    SURFACE,
    ChowClass,
    DegreeOverflow,
    IncompleteReduction,
    PipelineInconsistency,
    a_class,
    add,
    arithmetic_chern_classes,
    c1c2_product_class,
    c1c2_pushforward,
    euler_sequence_chern,
    gen_alpha,
    gen_x,
    mul,
    omega_image,
    pushforward_base,
    pushforward_deg,
    pushforward_deg_numeric,
    reduce,
    scale,
    segre_classes,
    sub,
    torsion_form,
    unit,
    zero_class,
)
from hirzebruch_torsion.constants import ExactConstant, log_2pi, log_rational
from hirzebruch_torsion.radial import RADIAL_ONE, QuadratureConfig

CFG = QuadratureConfig()


def ec(x):
    return ExactConstant.rational(x)


class TestReduce:
    def test_x_squared_on_base(self):
        c = ChowClass(0, BASE, {(2, 0): ec(1)})
        r = reduce(c)
        assert not r.poly
        assert len(r.analytic) == 1
        coeff, form = r.analytic[0]
        assert coeff == ec(1) and form.total_integral == 1
        assert pushforward_deg(c) == ec(Fraction(1, 2))

    def test_x_cubed_vanishes_on_base(self):
        c = ChowClass(0, BASE, {(3, 0): ec(1)})
        assert reduce(c).is_zero

    def test_alpha_x_squared_degree(self):
        n = 4
        c = ChowClass(n, SURFACE, {(2, 1): ec(1)})
        assert pushforward_deg(c) == ec(Fraction(1, 2))

    def test_alpha_squared_x_reduces_to_analytic(self):
        for n in (0, 1, 3, 7):
            c = ChowClass(n, SURFACE, {(1, 2): ec(1)})
            r = reduce(c)
            assert not r.poly
            assert pushforward_deg(c) == ec(Fraction(n + 3, 2))

    def test_idempotence_100_random_classes(self):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.choice([0, 1, 2, 5])
            poly = {(rng.randint(0, 2), rng.randint(0, 2)):
                    ec(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
                    for _ in range(rng.randint(0, 3))}
            poly = {m: c for m, c in poly.items() if sum(m) <= 3}
            analytic = []
            if rng.random() < 0.6:
                analytic.append((log_2pi().scale(rng.randint(-3, 3)), RADIAL_ONE))
            if rng.random() < 0.6:
                analytic.append((ec(rng.randint(-3, 3)), forms.alpha_form(n)))
            if rng.random() < 0.4:
                analytic.append((ec(rng.randint(-3, 3)),
                                 forms.wedge(forms.alpha_form(n), forms.alpha_form(n))))
            c = ChowClass(n, SURFACE, poly, analytic)
            once = reduce(c)
            assert reduce(once) == once

    def test_trace_records_rewrites(self):
        trace = []
        reduce(ChowClass(2, SURFACE, {(1, 2): ec(1)}), trace)
        rules = {t["rule"] for t in trace}
        assert "alpha_square" in rules and "x_square" in rules
        for t in trace:
            assert set(t) == {"rule", "before", "after"}
        json.dumps(trace)  # serializable for the audit stream


class TestMul:
    def test_x_times_a_x_vanishes_on_base(self):
        n = 0
        x = gen_x(n, BASE)
        ax = a_class(n, 1, chow.base_top_form(n), BASE)
        assert mul(x, ax).is_zero

    def test_alpha_times_a_x(self):
        n = 2
        out = mul(gen_alpha(n), a_class(n, 1, forms.base_form(n)))
        assert not out.poly
        assert len(out.analytic) == 1
        coeff, form = out.analytic[0]
        assert coeff == ec(1)
        assert form.total_integral == 1  # alpha ^ base has unit mass

    def test_constant_weight_passes_through(self):
        n = 1
        out = mul(a_class(n, log_2pi(), RADIAL_ONE), gen_alpha(n))
        assert len(out.analytic) == 1
        coeff, form = out.analytic[0]
        assert coeff == log_2pi()
        assert form.key == ("alpha",)

    def test_commutative_on_catalog_classes(self):
        rng = random.Random(23)
        n = 2
        pool = [
            gen_x(n), gen_alpha(n), unit(n),
            a_class(n, log_2pi(), RADIAL_ONE),
            a_class(n, ec(3), forms.alpha_form(n)),
            a_class(n, ec(-2), forms.log_R(n)),
            arithmetic_chern_classes(n).c1_tangent,
        ]
        for _ in range(40):
            a, b = rng.choice(pool), rng.choice(pool)
            assert mul(a, b) == mul(b, a)

    def test_associative_when_curvatures_are_cataloged(self):
        rng = random.Random(29)
        n = 3
        pool = [
            gen_x(n), gen_alpha(n),
            add(gen_x(n), a_class(n, log_2pi(), RADIAL_ONE)),
            add(scale(2, gen_alpha(n)), scale(-n, gen_x(n))),
        ]
        for _ in range(25):
            a, b, c = (rng.choice(pool) for _ in range(3))
            try:
                left = mul(mul(a, b), c)
                right = mul(a, mul(b, c))
            except DegreeOverflow:
                continue
            assert left == right

    def test_degree_overflow_errors(self):
        n = 1
        quad = ChowClass(n, SURFACE, {(2, 2): ec(1)})
        with pytest.raises(DegreeOverflow):
            mul(quad, gen_x(n))


class TestPushforwardDeg:
    def test_requires_registered_mass(self):
        n = 2
        orphan = forms.Form22(n, forms.coeff_B(), key=("orphan",))
        with pytest.raises(chow.MissingExactIntegral):
            pushforward_deg(a_class(n, 1, orphan))

    def test_rejects_mixed_degrees(self):
        n = 1
        with pytest.raises(chow.ChowError):
            pushforward_deg(add(gen_x(n), ChowClass(n, SURFACE, {(1, 2): ec(1)})))

    def test_numeric_route_matches_exact(self):
        n = 3
        c = ChowClass(n, SURFACE, {(1, 2): ec(8), (2, 1): ec(-8 * (n + 1))})
        exact = pushforward_deg(c)
        assert pushforward_deg_numeric(c, CFG) == pytest.approx(
            exact.to_float(), abs=1e-9)


class TestPushforwardBase:
    def test_todd_degree_one_projects_to_unit(self):
        n = 2
        c = add(add(gen_alpha(n), scale(Fraction(-(n + 2), 2), gen_x(n))),
                a_class(n, log_2pi().scale(Fraction(1, 2)), RADIAL_ONE))
        out = pushforward_base(c)
        assert out == unit(n, BASE)

    def test_alpha_x_projects_to_x(self):
        n = 1
        out = pushforward_base(ChowClass(n, SURFACE, {(1, 1): ec(5)}))
        assert out == scale(5, gen_x(n, BASE))

    def test_form_terms_use_fiber_masses(self):
        n = 3
        out = pushforward_base(a_class(n, ec(7), forms.alpha_form(n)))
        assert len(out.analytic) == 1
        coeff, form = out.analytic[0]
        assert coeff == ec(7) and form.const_value == 1


class TestOmegaCompatibility:
    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    def test_degree2_relation_images_agree(self, n):
        lhs = sub(ChowClass(n, SURFACE, {(0, 2): ec(1)}),
                  scale(n + 2, ChowClass(n, SURFACE, {(1, 1): ec(1)})))
        rhs = a_class(n, 1, forms.degree2_relation_rhs(n))
        lhs_forms = omega_image(lhs)
        rhs_forms = omega_image(rhs)

        def eval_22(terms, u):
            total = 0.0
            for coeff, form in terms:
                total += coeff.to_float() * form.g(u)
            return total

        for u in (0.05, 0.5, 1.0, 3.0, 40.0):
            assert eval_22(lhs_forms, u) == pytest.approx(eval_22(rhs_forms, u),
                                                          abs=1e-12)


class TestChernClasses:
    @pytest.mark.parametrize("n", [0, 1, 4])
    def test_polynomial_parts(self, n):
        cc = arithmetic_chern_classes(n)
        def nonzero(d):
            return {m: ec(c) for m, c in d.items() if c}
        assert cc.c1_tangent.poly == nonzero({(0, 1): 2, (1, 0): -n})
        assert cc.c2_tangent.poly == nonzero({(1, 1): 4, (2, 0): -2 * (n + 2)})
        assert cc.c1_relative.poly == nonzero({(0, 1): 2, (1, 0): -(n + 2)})

    @pytest.mark.parametrize("n", [0, 2])
    def test_relative_class_at_split_value(self, n):
        cc = arithmetic_chern_classes(n)
        analytic = dict((form.key, coeff) for coeff, form in cc.c1_relative.analytic)
        assert analytic[RADIAL_ONE.key] == log_2pi()

    @pytest.mark.parametrize("n", [1, 3])
    def test_whitney_product_reproduces_the_tangent_classes(self, n):
        # total class of the two factor bundles, minus the secondary correction,
        # must reproduce the tangent classes degree by degree
        cc = arithmetic_chern_classes(n)
        secondary = a_class(n, ec(1), forms.bott_chern_c2(n))
        product = mul(add(unit(n), cc.c1_relative), add(unit(n), cc.c1_base))
        assert product.degree_part(1) == reduce(cc.c1_tangent)
        assert product.degree_part(2) == reduce(add(cc.c2_tangent, secondary))

    def test_euler_sequence_total_class(self):
        n = 3
        c1, c2 = euler_sequence_chern(n)
        assert c1 == scale(n + 2, gen_x(n, BASE))
        r = reduce(c2)
        assert not r.poly and len(r.analytic) == 1
        coeff, form = r.analytic[0]
        assert coeff == ec(n + 1) and form.total_integral == 1


class TestSegreAndHeight:
    @pytest.mark.parametrize("n", [0, 1, 5, 10])
    def test_first_class(self, n):
        s1, _ = segre_classes(n)
        expected = add(scale(n + 2, gen_x(n, BASE)),
                       a_class(n, ec(1), RADIAL_ONE, BASE))
        assert s1 == reduce(expected)

    @pytest.mark.parametrize("n,coeff", [(0, 6), (1, Fraction(23, 2)),
                                         (10, Fraction(302, 2))])
    def test_second_class_coefficient(self, n, coeff):
        _, s2 = segre_classes(n)
        assert not s2.poly
        assert len(s2.analytic) == 1
        got, form = s2.analytic[0]
        assert got == ec(Fraction(2 * n * n + 9 * n + 12, 2))
        assert ec(coeff) == got

    @pytest.mark.parametrize("n", range(0, 21, 4))
    def test_height_routes_agree(self, n):
        direct = pushforward_deg(segre_classes(n)[1])
        cube = pushforward_deg(chow.height_class(n))
        assert direct == cube == ec(Fraction(2 * n * n + 9 * n + 12, 4))

    @pytest.mark.parametrize("n", [0, 1, 3, 8])
    def test_ruling_pushforward_of_tautological_powers(self, n):
        # pushing the squared and cubed tautological class down the ruling
        # must reproduce the two pushforward classes assembled on the base
        s1, s2 = segre_classes(n)
        sq = pushforward_base(ChowClass(n, SURFACE, {(0, 2): ec(1)}))
        cube = pushforward_base(ChowClass(n, SURFACE, {(0, 3): ec(1)}))
        assert sq == s1
        assert cube == s2


class TestC1C2:
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_closed_form(self, n):
        got = c1c2_pushforward(n)
        expected = (log_rational(n + 1).scale(n) + ec(-4 * n + 16)
                    + log_2pi().scale(16)).scale(Fraction(1, 2))
        assert got == expected

    def test_split_case_limit(self):
        assert c1c2_pushforward(0) == (ec(16) + log_2pi().scale(16)).scale(
            Fraction(1, 2))

    def test_example_value_n1(self):
        # (log 2 - 4 + 16 + 16 log 2pi)/2
        got = c1c2_pushforward(1)
        expected = (log_rational(2) + ec(12) + log_2pi().scale(16)).scale(
            Fraction(1, 2))
        assert got == expected

    @pytest.mark.parametrize("n", [0, 1, 3])
    def test_generic_product_quadrature_crosscheck(self, n):
        exact = c1c2_pushforward(n).to_float()
        numeric = pushforward_deg_numeric(c1c2_product_class(n), CFG)
        assert numeric == pytest.approx(exact, abs=1e-8)

    def test_analytic_pairing_is_flagged_in_trace(self):
        trace = []
        c1c2_product_class(2, trace)
        assert any(t["rule"] == "analytic_product" for t in trace)


class TestTorsionForm:
    @pytest.mark.parametrize("n", [0, 1, 2, 7, 20])
    def test_value_is_n_independent(self, n):
        from hirzebruch_torsion.constants import ZETA_M1, ZETA_PRIME_M1
        got = torsion_form(n, CFG)
        expected = (ec(1) + log_2pi()).scale(Fraction(1, 3)) \
            - ExactConstant.atom(ZETA_PRIME_M1, 4) - ExactConstant.atom(ZETA_M1, 2)
        assert got == expected

    def test_genus_contribution(self):
        from hirzebruch_torsion.torsion import R_GENUS_DEGREE1
        assert R_GENUS_DEGREE1.scale(2).to_float() == pytest.approx(
            4 * -0.16542114370045093 + 2 * (-1 / 12), rel=1e-12)
