"""Pipelines end to end: both torsion routes, heights, integrals, reports."""

import json
import math
from fractions import Fraction

import pytest

from hirzebruch_torsion import torsion
from hirzebruch_torsion.constants import (
    ExactConstant,
    ZETA_M1,
    ZETA_PRIME_M1,
    log_2pi,
    log_rational,
)
from hirzebruch_torsion.radial import QuadratureConfig

CFG = QuadratureConfig()

# (1 + log 2pi)/3 - 4 zeta'(-1) - 2 zeta(-1) at 40-digit precision
TAU_P1_REFERENCE = 1.7743102636049188780


class TestTauP1:
    def test_exact_value(self):
        assert torsion.tau_p1() == torsion.closed_tau_p1()

    def test_float_value(self):
        assert torsion.tau_p1().to_float() == pytest.approx(TAU_P1_REFERENCE,
                                                            rel=1e-15)

    def test_atoms(self):
        t = torsion.tau_p1()
        assert t.rational_part == Fraction(1, 3)
        assert t.coefficient(ZETA_PRIME_M1) == -4
        assert t.coefficient(ZETA_M1) == -2


class TestClosedForms:
    def test_limit_values_at_zero(self):
        for fn in (torsion.closed_log_ratio_fiber_mass,
                   torsion.closed_c1_c1rel_log_ratio,
                   torsion.closed_c1_bott_chern,
                   torsion.closed_bb_first_term,
                   torsion.closed_c1_bott_chern_total,
                   torsion.closed_bb_todd_total):
            assert fn(0) == ExactConstant.zero()

    def test_total_is_sum_of_pieces(self):
        for n in (1, 2, 9):
            assert torsion.closed_c1_bott_chern_total(n) == \
                torsion.closed_c1_c1rel_log_ratio(n) + torsion.closed_c1_bott_chern(n)
            assert torsion.closed_bb_todd_total(n) == \
                (torsion.closed_bb_first_term(n)
                 + torsion.closed_c1_bott_chern_total(n)).scale(Fraction(1, 24))

    def test_spot_values_n1(self):
        assert torsion.closed_c1_c1rel_log_ratio(1) == \
            ExactConstant.rational(11) - log_rational(2).scale(13)
        assert torsion.closed_c1_bott_chern(1) == \
            ExactConstant.rational(-3) + log_rational(2).scale(4)

    def test_genus_pushforward_triple(self):
        base = ExactConstant.atom(ZETA_PRIME_M1, 8) + ExactConstant.atom(ZETA_M1, 4)
        assert torsion.r_genus_pushforward(0) == base
        assert torsion.r_genus_pushforward(1) == ExactConstant.zero()
        assert torsion.r_genus_pushforward(2) == -base


class TestNamedIntegrals:
    @pytest.mark.parametrize("n", [0, 1, 2, 5, 10])
    def test_all_pass(self, n):
        for m in torsion.named_integrals(n, CFG):
            assert m.passed, (n, m.name, m.abs_error)

    def test_tanh_sinh_scheme_sweep(self):
        ts = QuadratureConfig(scheme="tanh_sinh", target_tol=1e-9)
        for m in torsion.named_integrals(2, ts):
            assert m.passed, ("tanh_sinh", m.name, m.abs_error)

    def test_names_stable(self):
        names = [m.name for m in torsion.named_integrals(1, CFG)]
        assert names == [
            "halfline_inverse_cube", "fiber_mass_relative_form",
            "relative_form_wedge_alpha", "alpha_wedge_base", "surface_volume",
            "c1_c1rel_log_ratio", "c1_bott_chern_c2", "bb_first_term",
            "c1_bott_chern_total", "bb_todd_total", "c1_squared",
            "c1rel_squared"]


class TestQuillenData:
    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_exact_values(self, n):
        q = torsion.l2_quillen_data(n)
        assert q.norm_sq_h0_generator == Fraction(n + 2, 2)
        assert q.norm_sq_alpha == n + 2
        assert q.norm_sq_omega_harmonic == Fraction(2, n + 2)
        assert q.norm_sq_top_generator == Fraction(2, n + 2)
        assert q.orthonormal_scalar_sq == (Fraction(1, n + 2), Fraction(n + 2))
        assert q.lattice_covolume_middle == 1

    def test_quillen_log_norms(self):
        n = 3
        q = torsion.l2_quillen_data(n)
        assert q.quillen_log_norm_base == -torsion.tau_p1()
        tau = torsion.tau_route_rr(n)[0]
        assert q.quillen_log_norm_surface == log_rational(Fraction(n + 2, 2)) - tau


class TestRoutes:
    @pytest.mark.parametrize("n", range(0, 21))
    def test_equality_and_main_identity(self, n):
        res = torsion.main_theorem(n, CFG)
        assert res.tau_rr == res.tau_bb == res.tau_closed
        stated = torsion.log_np1(n).scale(Fraction(n, 24)) \
            + ExactConstant.rational(Fraction(-n, 6)) \
            + torsion.closed_tau_p1().scale(2)
        assert res.main_theorem_value == stated
        assert res.vol == Fraction(n + 2, 2)

    def test_duality(self):
        for n in (0, 1, 5, 12):
            tau, tau1, tau2 = torsion.tau_route_rr(n)
            assert tau1 == ExactConstant.zero()
            assert tau2 == -tau

    def test_split_case_is_twice_the_base_torsion(self):
        res = torsion.main_theorem(0, CFG)
        assert res.main_theorem_value == torsion.closed_tau_p1().scale(2)
        assert res.tau_rr == torsion.closed_tau_p1().scale(2)  # log(2/2) = 0

    def test_spot_value_n1(self):
        res = torsion.main_theorem(1, CFG)
        assert res.main_theorem_value == \
            log_rational(2).scale(Fraction(1, 24)) \
            + ExactConstant.rational(Fraction(-1, 6)) \
            + torsion.closed_tau_p1().scale(2)

    @pytest.mark.parametrize("n", [0, 1, 4, 9])
    def test_float_crosschecks(self, n):
        res = torsion.main_theorem(n, CFG)
        assert res.tau_rr.to_float() == res.tau_bb.to_float()
        assert torsion.bb_quadrature_float(n, CFG) == pytest.approx(
            res.tau_float, abs=1e-8)

    def test_route_check_entries_pass(self):
        for e in torsion.route_checks(2, CFG):
            assert e.passed, e


class TestHeights:
    @pytest.mark.parametrize("n,expected", [(0, 3), (1, Fraction(23, 4)),
                                            (10, Fraction(151, 2))])
    def test_spot_values(self, n, expected):
        assert torsion.height(n) == expected

    def test_range_against_closed_form(self):
        for n in range(0, 51):
            want = Fraction(2 * n * n + 9 * n + 12, 4)
            assert torsion.height(n) == want
            assert torsion.height_via_polarization_cube(n) == want


class TestGridAndHodgeSweeps:
    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    def test_appendix_checks(self, n):
        for e in torsion.appendix_grid_checks(n):
            assert e.passed, (n, e.name, e.abs_error)

    @pytest.mark.parametrize("n", [0, 1, 5])
    def test_hodge_checks(self, n):
        for e in torsion.hodge_l2_checks(n, CFG):
            assert e.passed, (n, e.name, e.abs_error)


class TestGrowthSanity:
    def test_sign_change_of_the_main_value(self):
        # tau - log Vol - 2 tau(base) = n log(n+1)/24 - n/6: negative while
        # log(n+1) < 4, positive after
        for n in range(1, 51):
            v = n * math.log(n + 1) / 24 - n / 6
            assert v < 0, n
        for n in range(56, 80):
            v = n * math.log(n + 1) / 24 - n / 6
            assert v > 0, n


class TestReports:
    def test_verify_all_passes(self):
        rep = torsion.verify_all([1, 4], CFG, height_range=8)
        assert rep.all_passed
        assert rep.max_abs_error < 1e-8

    def test_json_round_trip(self):
        rep = torsion.verify_all([1], CFG, height_range=2)
        parsed = json.loads(rep.to_json_text())
        assert parsed["all_passed"] is True
        assert len(parsed["entries"]) == len(rep.entries)
        for row, entry in zip(parsed["entries"], rep.entries):
            assert row["name"] == entry.name
            assert row["computed"] == entry.computed  # exact float round-trip
            assert row["expected"] == entry.expected_float

    def test_csv_round_trip(self):
        rep = torsion.verify_all([1], CFG, height_range=2)
        lines = rep.to_csv_text().strip().splitlines()
        assert lines[0] == "name,n,expected,computed,abs_error,pass"
        for line, entry in zip(lines[1:], rep.entries):
            name, nfield, expected, computed, abs_error, passed = line.split(",")
            assert name == entry.name
            assert float(computed) == entry.computed
            assert float(expected) == entry.expected_float
            assert (passed == "true") == entry.passed

    def test_table_schema_and_round_trip(self):
        rows = torsion.table_rows([0, 1], CFG)
        text = torsion.table_csv(rows)
        lines = text.strip().splitlines()
        assert lines[0].split(",") == ["n", "height", "tau_float",
                                       "tau_minus_logvol_float",
                                       "route_discrepancy",
                                       "max_integral_discrepancy"]
        n, h, tauf, mainf, disc, maxdisc = lines[2].split(",")
        assert int(n) == 1
        assert Fraction(h) == rows[1]["height"]
        assert float(tauf) == rows[1]["tau_float"]
        assert float(disc) == 0.0
