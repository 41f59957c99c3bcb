import math

import numpy as np
import pytest

from bidisk import BoundaryFunction, SourceFunction, SupNorms, boundary_sum_sup, sup_norm


def test_sup_norm_two_arc_exact():
    assert sup_norm(BoundaryFunction.two_arc(1.0, -1.0)) == 1.0
    assert sup_norm(BoundaryFunction.two_arc(0.2 + 0.1j, -3.0)) == 3.0


def test_sup_norm_single_mode_within_safety():
    v = sup_norm(BoundaryFunction.fourier({1: 1.0}))
    assert 1.0 <= v <= 1.001 * 1.0000001


def test_sup_norm_constant_source_exact():
    assert sup_norm(SourceFunction.constant(0.3 + 0.4j)) == 0.5


def test_sup_norm_radial_source():
    # |w|^2 peaks at 1 on the closed disk
    v = sup_norm(SourceFunction.radial([0.0, 1.0]))
    assert 1.0 <= v <= 1.0011


def test_fourier_validation():
    with pytest.raises(ValueError):
        BoundaryFunction.fourier({65: 1.0})
    with pytest.raises(ValueError):
        BoundaryFunction.fourier({1: float("nan")})


def test_samples_validation():
    with pytest.raises(ValueError):
        BoundaryFunction.samples([1.0] * 63)
    with pytest.raises(ValueError):
        BoundaryFunction.samples([1.0] * 100)
    BoundaryFunction.samples([1.0] * 64)


def test_two_arc_evaluation_and_breakpoints():
    b = BoundaryFunction.two_arc(2.0, -1.0)
    assert b.evaluate(0.5) == 2.0
    assert b.evaluate(math.pi + 0.5) == -1.0
    assert b.breakpoints() == (0.0, math.pi)
    assert b.mean() == 0.5
    assert b.modes() is None


def test_samples_interpolation_hits_samples():
    rng = np.random.default_rng(11)
    n = 64
    vals = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    b = BoundaryFunction.samples(vals)
    theta = 2.0 * math.pi * np.arange(n) / n
    recon = b.evaluate(theta)
    assert np.max(np.abs(recon - vals)) < 1e-12


def test_fourier_evaluation():
    b = BoundaryFunction.fourier({0: 0.5, 2: 1.0, -1: -0.25j})
    th = 0.7
    expected = 0.5 + np.exp(2j * th) - 0.25j * np.exp(-1j * th)
    assert abs(b.evaluate(th) - expected) < 1e-15


def test_boundary_sum_sup_two_arc_exact():
    f = BoundaryFunction.two_arc(1.0, -1.0)
    h = BoundaryFunction.two_arc(-1.0, 1.0)
    assert boundary_sum_sup(f, h) == 0.0


def test_source_poly_monomials():
    # x^2 = ((w + conj w)/2)^2
    g = SourceFunction.poly([(2, 0, 1.0)])
    m = g.monomials()
    assert abs(m[(2, 0)] - 0.25) < 1e-15
    assert abs(m[(1, 1)] - 0.5) < 1e-15
    assert abs(m[(0, 2)] - 0.25) < 1e-15
    w = 0.3 + 0.2j
    assert abs(g.evaluate(w) - w.real**2) < 1e-15


def test_source_radial_evaluation():
    g = SourceFunction.radial([1.0, -2.0, 0.5])
    w = 0.4 - 0.1j
    s = abs(w) ** 2
    assert abs(g.evaluate(w) - (1.0 - 2.0 * s + 0.5 * s * s)) < 1e-15


def test_source_poly_degree_cap():
    with pytest.raises(ValueError):
        SourceFunction.poly([(4, 3, 1.0)])


def test_sup_norms_validation():
    with pytest.raises(ValueError):
        SupNorms(-1.0, 0.0, 0.0)
    SupNorms(0.0, 0.0, 0.0)
