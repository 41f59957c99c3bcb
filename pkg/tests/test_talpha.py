import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bidisk import (
    BoundaryFunction,
    CoefficientSequence,
    KernelKind,
    QuadratureConfig,
    boundary_transform,
    coefficient_bound_check,
    gauss_hypergeometric,
    t2_coefficient_extract,
    t2_derivatives,
    t2_field_sup,
    t2_gradient_deviation_bound,
    t_alpha_eval,
)
from test_kernels import wirtinger_fd


# ---------------------------------------------------------------------------
# hypergeometric series
# ---------------------------------------------------------------------------

def test_hypergeometric_at_zero():
    assert gauss_hypergeometric(0.7, -2.3, 1.5, 0.0) == 1.0


def test_hypergeometric_terminating_cases():
    for w in np.linspace(0.0, 1.0, 11):
        assert math.isclose(gauss_hypergeometric(-1, 1, 3, w), 1 - w / 3, rel_tol=1e-15)
        assert math.isclose(gauss_hypergeometric(-1, -1, 1, w), 1 + w, rel_tol=1e-15)


def test_hypergeometric_closed_form_family():
    # F(-1, k-1; k+1; w) = 1 - (k-1) w / (k+1)
    for k in range(1, 65):
        for w in np.linspace(0.0, 1.0, 7):
            got = gauss_hypergeometric(-1, k - 1, k + 1, w)
            assert math.isclose(got, 1 - (k - 1) * w / (k + 1), rel_tol=1e-15, abs_tol=1e-15)


@given(st.integers(min_value=1, max_value=64), st.floats(min_value=0.0, max_value=1.0))
def test_hypergeometric_sandwich(k, w):
    val = gauss_hypergeometric(-1, k - 1, k + 1, w)
    assert 2.0 / (k + 1) - 1e-15 <= val <= 1.0 + 1e-15


def test_hypergeometric_domain_errors():
    with pytest.raises(ValueError):
        gauss_hypergeometric(0.5, 0.5, 0, 0.3)
    with pytest.raises(ValueError):
        gauss_hypergeometric(0.5, 0.5, -2, 0.3)
    with pytest.raises(ValueError):
        gauss_hypergeometric(0.5, 0.5, 1.5, 1.0)  # non-terminating at x = 1
    gauss_hypergeometric(-2, 0.5, 1.5, 1.0)  # terminating: x = 1 allowed


def test_hypergeometric_nonterminating_value():
    # log(1 - x) = -x F(1, 1; 2; x)
    x = 0.37
    assert math.isclose(-x * gauss_hypergeometric(1, 1, 2, x), math.log1p(-x), rel_tol=1e-13)


# ---------------------------------------------------------------------------
# expansion evaluation
# ---------------------------------------------------------------------------

def test_t2_constant_field():
    s = CoefficientSequence.of(2.0, {0: 0.5})
    for z in (0.3, 0.5 + 0.2j, 0.8j):
        assert abs(t_alpha_eval(s, z) - 0.5 * (1 + abs(z) ** 2)) < 1e-15


def test_t2_linear_field():
    s = CoefficientSequence.of(2.0, {1: 1.0})
    for z in (0.3, 0.5 + 0.2j):
        assert abs(t_alpha_eval(s, z) - z) < 1e-15


def test_alpha_zero_is_harmonic_polynomial():
    s = CoefficientSequence.of(0.0, {0: 1.0, 2: 0.5, -1: -0.25j})
    z = 0.4 - 0.3j
    expected = 1.0 + 0.5 * z**2 - 0.25j * np.conj(z)
    assert abs(t_alpha_eval(s, z) - expected) < 1e-14


def test_t_alpha_eval_general_alpha_matches_series():
    # independent direct sum with scipy-free hypergeometric evaluation
    s = CoefficientSequence.of(3.0, {1: 1.0, -2: 0.5})
    z = 0.4 + 0.1j
    x = abs(z) ** 2
    expected = gauss_hypergeometric(-1.5, 1 - 1.5, 2, x) * z
    expected += 0.5 * gauss_hypergeometric(-1.5, 2 - 1.5, 3, x) * np.conj(z) ** 2
    assert abs(t_alpha_eval(s, z) - expected) < 1e-14


def test_t2_derivatives_match_finite_differences():
    s = CoefficientSequence.of(2.0, {0: 0.3, 1: 0.5, 3: -0.2j, -2: 0.4, -5: 0.1})
    z = 0.35 - 0.2j
    pair = t2_derivatives(s, z)
    fd_dz = wirtinger_fd(lambda u: t_alpha_eval(s, u), z)
    fd_dzb = np.conj(wirtinger_fd(lambda u: np.conj(t_alpha_eval(s, u)), z))
    assert abs(pair.dz - fd_dz) < 1e-8
    assert abs(pair.dzbar - fd_dzb) < 1e-8


# ---------------------------------------------------------------------------
# coefficient extraction
# ---------------------------------------------------------------------------

def k2_field(ustar, cfg=None):
    cfg = cfg or QuadratureConfig()
    return lambda z: boundary_transform(KernelKind.K2, ustar, z, cfg)


def test_extract_constant_field():
    s = t2_coefficient_extract(k2_field(BoundaryFunction.fourier({0: 1.0})), radius=0.5, degree=8)
    d = s.as_dict()
    assert abs(d.get(0, 0) - 0.5) < 1e-12
    assert all(abs(v) < 1e-10 for k, v in d.items() if k != 0)


def test_extract_linear_field():
    s = t2_coefficient_extract(k2_field(BoundaryFunction.fourier({1: 1.0})), radius=0.5, degree=8)
    d = s.as_dict()
    assert abs(d.get(1, 0) - 1.0) < 1e-8
    assert all(abs(v) < 1e-10 for k, v in d.items() if k != 1)


def test_extract_roundtrip_random():
    rng = np.random.default_rng(7)
    coeffs = {
        k: rng.standard_normal() + 1j * rng.standard_normal()
        for k in range(-8, 9)
    }
    s = CoefficientSequence.of(2.0, coeffs)
    recovered = t2_coefficient_extract(lambda z: t_alpha_eval(s, z), radius=0.6, degree=8)
    d = recovered.as_dict()
    for k, c in coeffs.items():
        assert abs(d.get(k, 0j) - c) < 1e-9


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=0.3, max_value=0.8), st.integers(min_value=0, max_value=2**31))
def test_extract_roundtrip_property(radius, seed):
    rng = np.random.default_rng(seed)
    coeffs = {
        k: (rng.standard_normal() + 1j * rng.standard_normal()) / (1 + abs(k))
        for k in range(-6, 7)
    }
    s = CoefficientSequence.of(2.0, coeffs)
    recovered = t2_coefficient_extract(lambda z: t_alpha_eval(s, z), radius=radius, degree=6)
    d = recovered.as_dict()
    for k, c in coeffs.items():
        assert abs(d.get(k, 0j) - c) < 1e-9


def test_extract_zero_radius_rejected():
    with pytest.raises(ValueError):
        t2_coefficient_extract(lambda z: z, radius=0.0, degree=4)


# ---------------------------------------------------------------------------
# coefficient bounds
# ---------------------------------------------------------------------------

def test_bound_check_zero_sequence():
    rep = coefficient_bound_check(CoefficientSequence.of(2.0, {}), 1.0)
    assert rep.all_hold


def test_bound_check_linear_field():
    rep = coefficient_bound_check(CoefficientSequence.of(2.0, {1: 1.0}), 1.0)
    assert rep.all_hold
    row = rep.rows[0]
    assert math.isclose(row.weighted, 1.0, rel_tol=1e-15)
    assert math.isclose(row.limit, 4.0 / math.pi, rel_tol=1e-15)


def test_bound_check_two_arc_extremal_field():
    ustar = BoundaryFunction.two_arc(1.0, -1.0)
    s = t2_coefficient_extract(k2_field(ustar), radius=0.5, degree=16)
    rep = coefficient_bound_check(s, 1.0)
    assert rep.all_hold


def test_bound_check_random_kernel_images():
    from bidisk import random_boundary

    for seed in range(20):
        ustar = random_boundary(seed, degree=8, sup_bound=1.0)
        s = t2_coefficient_extract(k2_field(ustar), radius=0.5, degree=16)
        rep = coefficient_bound_check(s, 1.0)
        assert rep.all_hold


def test_c0_bound_tight_for_constant_data():
    # u* = 1 gives the field (1+|z|^2)/2 with sup 1 and mean coefficient 1/2
    s = t2_coefficient_extract(k2_field(BoundaryFunction.fourier({0: 1.0})), radius=0.5, degree=4)
    rep = coefficient_bound_check(s, 1.0)
    assert rep.c0_holds
    assert math.isclose(rep.c0_value, 1.0, rel_tol=1e-10)  # equality case


# ---------------------------------------------------------------------------
# gradient deviation bound
# ---------------------------------------------------------------------------

def test_deviation_bound_values():
    assert t2_gradient_deviation_bound(5.0, 0.0) == 0.0
    assert math.isclose(t2_gradient_deviation_bound(1.0, 0.5), 34.0 / math.pi, rel_tol=1e-15)
    assert t2_gradient_deviation_bound(1.0, 0.6) > t2_gradient_deviation_bound(1.0, 0.5)


def test_deviation_bound_strictly_increasing():
    rs = np.linspace(0.0, 0.99, 400)
    vals = [t2_gradient_deviation_bound(1.0, r) for r in rs]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_deviation_bound_domain():
    with pytest.raises(ValueError):
        t2_gradient_deviation_bound(-1.0, 0.5)
    with pytest.raises(ValueError):
        t2_gradient_deviation_bound(1.0, 1.0)


def test_gradient_deviation_empirical():
    # termwise derivative deviations of random mean-free fields stay below the bound
    rng = np.random.default_rng(12)
    for _ in range(50):
        coeffs = {
            k: (rng.standard_normal() + 1j * rng.standard_normal()) / (1 + abs(k))
            for k in list(range(1, 9)) + list(range(-8, 0))
        }
        s = CoefficientSequence.of(2.0, coeffs)
        m = t2_field_sup(s)
        g0 = t2_derivatives(s, 0j)
        for rr in (0.2, 0.5, 0.7):
            z = rr * np.exp(2j * math.pi * rng.random())
            g = t2_derivatives(s, complex(z))
            lhs = abs(g.dz - g0.dz) + abs(g.dzbar - g0.dzbar)
            assert lhs <= t2_gradient_deviation_bound(m, rr) + 1e-9


def test_field_sup_estimate_constant_field():
    s = CoefficientSequence.of(2.0, {0: 0.5})
    v = t2_field_sup(s)
    assert 0.99 <= v <= 1.01
