from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weylsys import (
    AccretivityReport,
    DomainError,
    MFunctionEvaluator,
    Potential,
    accretivity_and_sectoriality,
    bessel_m_closed_form,
    bessel_neg_m_alpha_closed_form,
    class_angles_from_alpha,
    classify_s_beta12,
    herglotz_test,
    kernel_matrix,
    kernel_psd_test,
    sector_angle_from_gap,
    sector_angle_from_product,
    stieltjes_test,
    verify_example_suite,
)

HALF_PI = math.pi / 2.0


def one_over_m(z):
    return 1.0 / bessel_m_closed_form(z)


def minus_m(z):
    return -bessel_m_closed_form(z)


# ---------------------------------------------------------------------------
# grid verdicts
# ---------------------------------------------------------------------------

def test_herglotz_verdicts():
    assert herglotz_test(one_over_m).passed
    assert herglotz_test(minus_m).passed
    bad = herglotz_test(bessel_m_closed_form)
    assert not bad.passed
    assert bad.witness is not None and bad.witness.value.imag < 0.0


def test_herglotz_grid_validation():
    with pytest.raises(DomainError):
        herglotz_test(one_over_m, grid=[])
    with pytest.raises(DomainError):
        herglotz_test(one_over_m, grid=[1j, -1j])


def test_one_over_m_is_stieltjes():
    verdict = stieltjes_test(one_over_m)
    assert verdict.passed
    assert "negative-axis checks passed" in verdict.detail


def test_minus_m_is_not_stieltjes():
    verdict = stieltjes_test(minus_m)
    assert not verdict.passed
    assert verdict.witness is not None


def test_m_itself_fails_stieltjes_on_the_complex_grid():
    # m is positive on (-inf, 0) but z m(z) is not Herglotz
    verdict = stieltjes_test(bessel_m_closed_form)
    assert not verdict.passed
    assert "Im(z f(z))/Im z negative" in verdict.detail


def test_stieltjes_detects_a_decreasing_axis_profile():
    # healthy off the axis, decreasing along (-inf, 0): only the
    # monotonicity check can catch it
    def f(z):
        z = complex(z)
        return one_over_m(z) if z.imag != 0.0 else complex(-z.real)

    verdict = stieltjes_test(f)
    assert not verdict.passed
    assert "nondecreasing" in verdict.detail


def test_stieltjes_rejects_bad_grids():
    with pytest.raises(DomainError):
        stieltjes_test(one_over_m, complex_grid=[1.0])
    with pytest.raises(DomainError):
        stieltjes_test(one_over_m, negative_grid=[-1.0, 2.0])


# ---------------------------------------------------------------------------
# sector kernel
# ---------------------------------------------------------------------------

def test_kernel_single_point_frozen_value():
    kern = kernel_matrix(one_over_m, math.pi / 4.0, [1j])
    assert kern.shape == (1, 1)
    assert kern[0, 0].real == pytest.approx(3.0 / math.sqrt(2.0) - 2.0, rel=1e-12)
    assert kern[0, 0].real == pytest.approx(0.12132034355964239, rel=1e-12)
    assert kern[0, 0].imag == 0.0


def test_kernel_matrix_is_hermitian():
    pts = [0.5 + 1j, -2.0 + 0.3j, 1.0 + 2.5j, 3.0 + 0.7j]
    kern = kernel_matrix(one_over_m, 1.1, pts)
    assert np.allclose(kern, kern.conj().T, atol=0)


def test_kernel_validation():
    with pytest.raises(DomainError):
        kernel_matrix(one_over_m, 0.0, [1j])
    with pytest.raises(DomainError):
        kernel_matrix(one_over_m, 2.0, [1j])  # beta > pi/2
    with pytest.raises(DomainError):
        kernel_matrix(one_over_m, 1.0, [])
    with pytest.raises(DomainError):
        kernel_matrix(one_over_m, 1.0, [1.0 - 1j])


def test_kernel_psd_at_the_class_angle():
    report = kernel_psd_test(one_over_m, math.pi / 4.0, trials=100)
    assert report.psd
    assert report.trials == 100
    assert report.min_eigenvalue >= -report.tol * max(1.0, report.scale)


def test_kernel_fails_well_below_the_class_angle():
    report = kernel_psd_test(one_over_m, math.pi / 100.0, trials=20)
    assert not report.psd
    assert report.min_eigenvalue < 0.0
    assert bool(report) is False


def test_kernel_psd_with_explicit_points_is_deterministic():
    pts = (1j, 0.5 + 0.5j, -1.0 + 2j)
    a = kernel_psd_test(one_over_m, math.pi / 4.0, points=pts)
    b = kernel_psd_test(one_over_m, math.pi / 4.0, points=pts)
    assert a.min_eigenvalue == b.min_eigenvalue
    assert a.trials == 1


# ---------------------------------------------------------------------------
# class angles
# ---------------------------------------------------------------------------

def test_classify_one_over_m():
    beta1, beta2 = classify_s_beta12(lambda x: one_over_m(x))
    assert beta1 == pytest.approx(0.0, abs=1e-6)
    assert beta2 == pytest.approx(math.pi / 4.0, abs=1e-6)


def test_classify_divergent_limit_gives_half_pi():
    # f(x) = 1/sqrt(-x) is Stieltjes with f(-0) = +inf and f(-inf) = 0
    beta1, beta2 = classify_s_beta12(lambda x: 1.0 / math.sqrt(-x))
    assert beta1 == pytest.approx(0.0, abs=1e-6)
    assert beta2 == HALF_PI


def test_classify_m_raises_on_disordered_limits():
    with pytest.raises(DomainError):
        classify_s_beta12(lambda x: bessel_m_closed_form(x))


def test_class_angles_from_alpha_frozen_example():
    beta1, beta2 = class_angles_from_alpha(math.pi / 3.0)
    assert beta1 == pytest.approx(math.pi / 6.0, rel=1e-14)
    assert beta2 == pytest.approx(5.0 * math.pi / 12.0, rel=1e-14)


def test_class_angles_match_the_limit_classification():
    alpha = math.pi / 3.0
    got = classify_s_beta12(lambda x: bessel_neg_m_alpha_closed_form(alpha, x))
    want = class_angles_from_alpha(alpha)
    assert got.beta1 == pytest.approx(want.beta1, abs=1e-6)
    assert got.beta2 == pytest.approx(want.beta2, abs=1e-6)


def test_class_angles_domain_errors():
    with pytest.raises(DomainError):
        class_angles_from_alpha(0.0)
    with pytest.raises(DomainError):
        class_angles_from_alpha(HALF_PI)
    with pytest.raises(DomainError):
        class_angles_from_alpha(math.pi / 6.0)  # tan(alpha) * m0 = 0.577 <= 1
    with pytest.raises(DomainError):
        class_angles_from_alpha(1.0, m0=0.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(math.pi / 4.0 + 1e-3, HALF_PI - 1e-3))
def test_class_gap_is_quarter_pi_when_m0_is_one(alpha):
    beta1, beta2 = class_angles_from_alpha(alpha, m0=1.0)
    assert beta2 - beta1 == pytest.approx(math.pi / 4.0, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.1, HALF_PI - 1e-3), st.floats(0.2, 8.0))
def test_class_angles_are_ordered(alpha, m0):
    t = math.tan(alpha)
    if t * m0 <= 1.0 + 1e-9:
        return
    beta1, beta2 = class_angles_from_alpha(alpha, m0=m0)
    assert 0.0 < beta1 < beta2 < HALF_PI


# ---------------------------------------------------------------------------
# sector angle formulas
# ---------------------------------------------------------------------------

def test_sector_angle_frozen_tangents():
    b1, b2 = math.pi / 6.0, 5.0 * math.pi / 12.0
    assert math.tan(sector_angle_from_product(b1, b2)) == pytest.approx(
        3.5131299192244385, rel=1e-9)
    assert math.tan(sector_angle_from_gap(b1, b2)) == pytest.approx(
        6.431211569767402, rel=1e-9)


def test_sector_angle_formulas_disagree_in_general():
    b1, b2 = math.pi / 6.0, 5.0 * math.pi / 12.0
    assert sector_angle_from_product(b1, b2) < sector_angle_from_gap(b1, b2)


def test_sector_angle_edge_cases():
    assert sector_angle_from_product(0.0, 1.0) == 0.0
    assert sector_angle_from_product(0.3, HALF_PI) == HALF_PI
    assert sector_angle_from_gap(0.0, 1.0) == pytest.approx(1.0, rel=1e-14)
    assert sector_angle_from_gap(0.8, 0.8) == pytest.approx(0.8, rel=1e-14)
    with pytest.raises(DomainError):
        sector_angle_from_product(0.0, HALF_PI)
    with pytest.raises(DomainError):
        sector_angle_from_gap(0.3, HALF_PI)
    with pytest.raises(DomainError):
        sector_angle_from_gap(1.0, 0.5)  # beta1 > beta2


@settings(max_examples=60, deadline=None)
@given(st.floats(1e-3, 1.2), st.floats(0.0, 0.3))
def test_sector_angle_bounds(beta1, gap):
    beta2 = min(beta1 + gap, HALF_PI - 1e-6)
    product = sector_angle_from_product(beta1, beta2)
    widened = sector_angle_from_gap(beta1, beta2)
    assert beta1 <= product + 1e-12 < HALF_PI
    assert beta2 <= widened + 1e-12 < HALF_PI


# ---------------------------------------------------------------------------
# accretivity and sectoriality
# ---------------------------------------------------------------------------

def test_accretivity_reference_case():
    # h = i, m0 = 1: threshold mu* = Re h + (Im h)^2/(m0 + Re h) = 1
    rep = accretivity_and_sectoriality(1j, 2.0, 1.0)
    assert rep.operator_accretive and rep.operator_sectorial
    assert rep.tan_theta == pytest.approx(1.0)
    assert rep.theta == pytest.approx(math.pi / 4.0)
    assert rep.mu_threshold == pytest.approx(1.0)
    assert rep.system_accretive and rep.system_sectorial and not rep.system_extremal


def test_accretivity_extremal_at_the_threshold():
    rep = accretivity_and_sectoriality(1j, 1.0, 1.0)
    assert rep.system_accretive and rep.system_extremal and not rep.system_sectorial


def test_accretivity_below_the_threshold():
    rep = accretivity_and_sectoriality(1j, 0.5, 1.0)
    assert not rep.system_accretive and not rep.system_sectorial


def test_accretivity_shifted_h():
    rep = accretivity_and_sectoriality(1.0 + 1j, 10.0, 1.0)
    assert rep.tan_theta == pytest.approx(0.5)
    assert rep.mu_threshold == pytest.approx(1.5)


def test_infinite_mu_preserves_the_operator_classification():
    rep = accretivity_and_sectoriality(1j, math.inf, 1.0)
    assert rep.system_sectorial and rep.preserves_exact_angle
    assert rep.theta == pytest.approx(math.pi / 4.0)


def test_non_accretive_operator():
    rep = accretivity_and_sectoriality(-2.0 + 1j, 5.0, 1.0)
    assert not rep.operator_accretive and not rep.operator_sectorial
    assert rep.mu_threshold is None
    assert rep.system_accretive is False
    assert any("not accretive" in n for n in rep.notes)


def test_accretive_but_extremal_operator():
    # Re h = -m0: accretive, never sectorial, no finite mu works
    rep = accretivity_and_sectoriality(-1.0 + 1j, 100.0, 1.0)
    assert rep.operator_accretive and not rep.operator_sectorial
    assert rep.tan_theta == math.inf
    assert rep.mu_threshold == math.inf
    assert rep.system_accretive is False
    at_inf = accretivity_and_sectoriality(-1.0 + 1j, math.inf, 1.0)
    assert at_inf.system_accretive is True and at_inf.system_extremal is True
    assert at_inf.system_sectorial is False


def test_infinite_m0_leaves_system_fields_undecided():
    rep = accretivity_and_sectoriality(1j, 1.0, math.inf)
    assert rep.operator_accretive and rep.operator_sectorial
    assert rep.system_accretive is None and rep.system_sectorial is None
    assert rep.mu_threshold is None
    assert any("m0 = +inf" in n for n in rep.notes)


def test_accretivity_validation():
    with pytest.raises(DomainError):
        accretivity_and_sectoriality(1.0, 1.0, 1.0)  # real h
    with pytest.raises(DomainError):
        accretivity_and_sectoriality(1j, 1.0, -math.inf)
    with pytest.raises(DomainError):
        accretivity_and_sectoriality(1j, 1.0, math.nan)


@settings(max_examples=50, deadline=None)
@given(st.floats(-0.9, 4.0), st.floats(0.1, 4.0), st.floats(0.2, 5.0))
def test_threshold_splits_the_mu_axis(re_h, im_h, m0):
    h = complex(re_h, im_h)
    rep = accretivity_and_sectoriality(h, 0.0, m0)
    if not rep.operator_sectorial:
        return
    thr = rep.mu_threshold
    above = accretivity_and_sectoriality(h, thr + 1e-6, m0)
    below = accretivity_and_sectoriality(h, thr - 1e-6, m0)
    assert above.system_accretive is True
    assert below.system_accretive is False


# ---------------------------------------------------------------------------
# the built-in example suite
# ---------------------------------------------------------------------------

@pytest.mark.slow
def test_example_suite_is_all_green():
    report = verify_example_suite()
    assert report.all_pass
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))  # check names are unique
    assert len(names) >= 20
    payload = report.to_dict()
    assert payload["pass"] is True
