"""Parameter reduction, sign cases, coefficient map, and closed-form bounds."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hexcover.circuits import cover_theta_sum
from hexcover.covers import cover_fixture
from hexcover.experiment import case4_eta_points
from hexcover.geometry import A2, A4, A6, M
from hexcover.model import (
    Case,
    EtaPoint,
    KappaVector,
    ab_values,
    classify,
    closed_form_bound,
    eval_hex_poly,
    eval_p_eta,
    hex_coefficients,
    negative_prefactor,
    reduce,
)

rate = st.floats(min_value=1e-2, max_value=1e2)


def test_reduce_all_ones():
    eta = reduce(KappaVector((1.0,) * 12))
    assert eta.as_tuple() == (2.0, 2.0, 2.0, 2.0, 1.0, 1.0, 1.0, 1.0)


def test_reduce_k1_ratio():
    k = [1.0] * 12
    k[0] = 2.0  # kappa1 = 2, kappa2 = kappa3 = 1
    assert reduce(KappaVector(tuple(k))).K1 == 1.0


@given(st.tuples(*([rate] * 12)), st.floats(min_value=0.5, max_value=4.0))
def test_reduce_scale_compatible(k, c):
    eta = reduce(KappaVector(k))
    scaled = list(k)
    scaled[0] *= c
    scaled[1] *= c
    scaled[2] *= c
    eta2 = reduce(KappaVector(tuple(scaled)))
    assert math.isclose(eta2.K1, eta.K1, rel_tol=1e-12)


def test_kappa_validation():
    with pytest.raises(ValueError):
        KappaVector((1.0,) * 11)
    with pytest.raises(ValueError):
        KappaVector((0.0,) + (1.0,) * 11)
    with pytest.raises(ValueError):
        EtaPoint(1, 1, 1, 1, 1, 1, 1, -1)


def test_ab_all_ones():
    assert ab_values(reduce(KappaVector((1.0,) * 12))) == (0.0, 0.0)


CASE3_WITNESS = EtaPoint(K1=3, K2=1, K3=1, K4=3, k3=1, k6=1, k9=1, k12=1)


def test_case3_witness():
    a, b = ab_values(CASE3_WITNESS)
    assert a == 0.0 and b == -4.0
    assert classify(CASE3_WITNESS).tag is Case.CASE3_A_ZERO_B_NEG


def test_classify_examples():
    assert classify(reduce(KappaVector((1.0,) * 12))).tag is Case.CASE1_MONOSTATIONARY
    # k6*k9 > k3*k12 forces a < 0
    assert classify(EtaPoint(1, 1, 1, 1, 1, 2, 2, 1)).tag is Case.CASE2_MULTISTATIONARY
    assert classify(EtaPoint(5, 1, 1, 5, 2, 1, 1, 1)).tag is Case.CASE4_A_POS_B_NEG


def test_case4_inequality_chain():
    # sampled case-4 points satisfy (K1+K4)/(K2+K3) > k3*k12/(k6*k9) > 1
    rng = np.random.default_rng(99)
    kappa = rng.uniform(0.0, 1.0, (12, 100_000))
    kappa = 1.0 - kappa  # strictly positive
    K1 = (kappa[1] + kappa[2]) / kappa[0]
    K2 = (kappa[4] + kappa[5]) / kappa[3]
    K3 = (kappa[7] + kappa[8]) / kappa[6]
    K4 = (kappa[10] + kappa[11]) / kappa[9]
    k3, k6, k9, k12 = kappa[2], kappa[5], kappa[8], kappa[11]
    a = k3 * k12 - k6 * k9
    b = (K2 + K3) * k3 * k12 - (K1 + K4) * k6 * k9
    mask = (a > 0) & (b < 0)
    assert mask.sum() > 1000
    ratio = (k3 * k12 / (k6 * k9))[mask]
    assert (ratio > 1.0).all()
    assert (((K1 + K4) / (K2 + K3))[mask] > ratio).all()


def test_hex_coefficients_match_example_circuit():
    # the {m, a2, a6, a4} coefficients of the displayed single-circuit example
    for eta in case4_eta_points(5, seed=21):
        K1, K2, K3, K4, k3, k6, k9, k12 = eta.as_tuple()
        a, b = ab_values(eta)
        coeffs = hex_coefficients(eta)
        assert math.isclose(coeffs.c_m, b * K1 * K2 * K3 * k3 * k6 * k12, rel_tol=1e-12)
        assert math.isclose(coeffs.coeffs[A2], K1**2 * K2 * K3 * K4 * k3 * k6**2 * k9 * k12,
                            rel_tol=1e-12)
        assert math.isclose(coeffs.coeffs[A6], K1**2 * K3**2 * k6**3 * k12**2, rel_tol=1e-12)
        assert math.isclose(coeffs.coeffs[A4], a * K2**2 * K4 * k3**2 * k9, rel_tol=1e-12)


def test_hex_coefficients_flag_non_case4():
    with pytest.raises(ValueError):
        hex_coefficients(reduce(KappaVector((1.0,) * 12)))
    # explicit opt-out returns the raw (partially nonpositive) coefficients
    coeffs = hex_coefficients(reduce(KappaVector((1.0,) * 12)), require_case4=False)
    assert coeffs.coeffs[A4] == 0.0


def _h_part(eta, x1, x3):
    """Degree-separation oracle for the hexagonal-face restriction.

    The face carries exactly the monomials of joint degree 4 in (x1, x2); the
    rest of the polynomial has joint degree 5.  Evaluating at (x1, 1) and
    (2*x1, 2) separates the two homogeneous parts exactly.
    """
    p1 = eval_p_eta(eta, x1, 1.0, x3)
    p2 = eval_p_eta(eta, 2.0 * x1, 2.0, x3)
    return 2.0 * p1 - p2 / 16.0


def test_hex_poly_matches_full_polynomial():
    rng = np.random.default_rng(5)
    for eta in case4_eta_points(20, seed=33):
        coeffs = hex_coefficients(eta)
        for _ in range(5):
            x1, x3 = rng.uniform(0.2, 5.0, 2)
            direct = eval_hex_poly(coeffs, x1, x3)
            assert math.isclose(direct, _h_part(eta, x1, x3), rel_tol=1e-10)


def test_case1_positive_everywhere():
    eta = EtaPoint(2, 2, 2, 2, 2, 1, 1, 1)  # a = 1 > 0, b = 8 - 4 = 4 > 0
    rng = np.random.default_rng(6)
    for _ in range(20):
        x1, x2, x3 = rng.uniform(0.1, 10.0, 3)
        assert eval_p_eta(eta, x1, x2, x3) > 0.0


def test_case2_attains_negative_values():
    grid = np.logspace(-4, 4, 100)
    x1, x3 = np.meshgrid(grid, grid, indexing="ij")
    found = 0
    for eta in _case2_points(20):
        coeffs = hex_coefficients(eta, require_case4=False)
        if eval_hex_poly(coeffs, x1, x3).min() < 0:
            found += 1
    assert found >= 19  # grid-resolution misses are rare


def _case2_points(n):
    from hexcover.experiment import SamplePlan, sample_case4

    out = []
    for eta, _, _ in sample_case4(SamplePlan(target_case4_samples=n, seed=8), case="case2"):
        out.extend(EtaPoint(*map(float, eta[:, j])) for j in range(eta.shape[1]))
    return out[:n]


def test_eval_p_eta_rejects_nonpositive_x():
    eta = reduce(KappaVector((1.0,) * 12))
    with pytest.raises(ValueError):
        eval_p_eta(eta, 0.0, 1.0, 1.0)


# ---------------------------------------------------------- closed forms


def test_closed_form_matches_theta_sum():
    for box in (0.1, 1.0, 10.0, 100.0):
        for eta in case4_eta_points(25, seed=13, box_size=box):
            coeffs = hex_coefficients(eta)
            pref = negative_prefactor(eta)
            for cid in (4, 10, 12, 15):
                lhs = closed_form_bound(cid, eta) * pref
                rhs = cover_theta_sum(cover_fixture(cid), coeffs.coeffs)
                assert math.isclose(lhs, rhs, rel_tol=1e-10), (cid, box)


def test_closed_form_swap_identity():
    for eta in case4_eta_points(50, seed=17):
        assert math.isclose(closed_form_bound(10, eta),
                            closed_form_bound(12, eta.swapped()), rel_tol=1e-12)
        assert math.isclose(closed_form_bound(12, eta),
                            closed_form_bound(10, eta.swapped()), rel_tol=1e-12)


def test_closed_form_9_is_generic_path():
    eta = case4_eta_points(1, seed=19)[0]
    coeffs = hex_coefficients(eta)
    expected = cover_theta_sum(cover_fixture(9), coeffs.coeffs) / negative_prefactor(eta)
    assert math.isclose(closed_form_bound(9, eta), expected, rel_tol=1e-12)


def test_closed_form_rejects_bad_input():
    with pytest.raises(ValueError):
        closed_form_bound(7, case4_eta_points(1, seed=19)[0])
    with pytest.raises(ValueError):
        closed_form_bound(15, reduce(KappaVector((1.0,) * 12)))


def test_certificate_scale_invariance():
    # scaling (k3, k6, k9, k12) by t scales a, b by t^2 and both certificate
    # sides identically, so the verdict is invariant
    for eta in case4_eta_points(10, seed=23):
        for t in (0.1, 3.0):
            scaled = EtaPoint(eta.K1, eta.K2, eta.K3, eta.K4,
                              t * eta.k3, t * eta.k6, t * eta.k9, t * eta.k12)
            a0, b0 = ab_values(eta)
            a1, b1 = ab_values(scaled)
            assert math.isclose(a1, t * t * a0, rel_tol=1e-12)
            assert math.isclose(b1, t * t * b0, rel_tol=1e-12)
            for cid in (4, 9, 10, 12, 15):
                verdict0 = -b0 <= closed_form_bound(cid, eta)
                verdict1 = -b1 <= closed_form_bound(cid, scaled)
                assert verdict0 == verdict1
