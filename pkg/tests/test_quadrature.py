import math

import numpy as np
import pytest

from bidisk import DEFAULT_CONFIG, KernelKind, QuadratureConfig, circle_mean, disk_mean, green, kernel_eval


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(n_theta=4)
    with pytest.raises(ValueError):
        QuadratureConfig(n_radial=2)
    assert DEFAULT_CONFIG.doubled() == QuadratureConfig(1024, 128, True)


def test_circle_mean_constant_exact():
    assert circle_mean(lambda th: np.ones_like(th)) == 1.0


def test_circle_mean_pure_mode_vanishes():
    cfg = QuadratureConfig(n_theta=64)
    val = circle_mean(lambda th: np.exp(1j * th), cfg)
    assert abs(val) < 1e-14


def test_circle_mean_poisson_kernel_has_unit_mean():
    val = circle_mean(lambda th: kernel_eval(KernelKind.POISSON, 0.5 * np.exp(-1j * th)))
    assert abs(val - 1.0) < 1e-12


def test_trapezoid_exact_on_trig_polynomials():
    rng = np.random.default_rng(5)
    K = 10
    coeffs = {k: rng.standard_normal() + 1j * rng.standard_normal() for k in range(-K, K + 1)}
    cfg = QuadratureConfig(n_theta=2 * K + 2)

    def fn(th):
        return sum(c * np.exp(1j * k * th) for k, c in coeffs.items())

    assert abs(circle_mean(fn, cfg) - coeffs[0]) < 1e-13


def test_per_arc_two_arc_indicator():
    # (1/2pi) [int_0^pi e^{-i t} dt - int_pi^{2pi} e^{-i t} dt] = -2i/pi
    def fn(th):
        sign = np.where(np.mod(th, 2 * math.pi) < math.pi, 1.0, -1.0)
        return np.exp(-1j * th) * sign

    val = circle_mean(fn, DEFAULT_CONFIG, breakpoints=(0.0, math.pi))
    assert abs(val - (-2j / math.pi)) < 1e-10


def test_disk_mean_constant_exact():
    assert abs(disk_mean(lambda w: np.ones_like(w)) - 1.0) < 1e-14


def test_disk_mean_radius_squared():
    assert abs(disk_mean(lambda w: np.abs(w) ** 2 + 0j) - 0.5) < 1e-12


def test_disk_mean_green_slice():
    # 1D oracle: 2 int_0^1 (-2 r^2 ln r - 1 + r^2) r dr = -1/4
    val = disk_mean(lambda w: green(0j, w) + 0j)
    assert abs(val - (-0.25)) < 1e-8


def test_disk_mean_convergence_plateau():
    def fn(w):
        return np.exp(w.real) * np.cos(w.imag) + 0j

    coarse = disk_mean(fn, DEFAULT_CONFIG)
    fine = disk_mean(fn, DEFAULT_CONFIG.doubled())
    assert abs(coarse - fine) < 1e-10


@pytest.mark.parametrize("z", [0.3 + 0j, 0.5 + 0.2j, 0.72j])
def test_kernel_circle_averages(z):
    x = abs(z) ** 2
    pairs = [
        (KernelKind.POISSON, 1.0),
        (KernelKind.K2, 0.5 * (1 + x)),
        (KernelKind.H0, 0.5 * (1 - x)),
        (KernelKind.F0, 1.0),
    ]
    for kind, expected in pairs:
        val = circle_mean(lambda th, k=kind: kernel_eval(k, z * np.exp(-1j * th)))
        assert abs(val - expected) < 1e-12
