"""Closed-form kernels for the disk biharmonic Dirichlet problem.

Evaluators for the harmonic Poisson kernel P, the biharmonic boundary
kernels H0 and K2 with F0 = H0 + K2, the biharmonic Green function G of
the unit disk, the z-derivatives of G and of the rotated K2 kernel, the
weighted-kernel normalization series I_alpha, and the partial angular
integral J of the K2 kernel.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .geometry import DiskPoint, WirtingerPair, as_complex

__all__ = [
    "KernelKind",
    "kernel_eval",
    "green",
    "green_gradient",
    "k2_kernel_gradient",
    "poisson_kernel_gradient",
    "i_alpha",
    "j_integral",
]

# Closed form of J(theta) blows up through tan(theta/2) at theta = pi;
# inside this band the removable limit pi*(1 + r^2) is returned instead.
_J_LIMIT_BAND = 1e-9


class KernelKind(enum.Enum):
    POISSON = "P"
    H0 = "H0"
    K2 = "K2"
    F0 = "F0"


def _require_open(z, who: str):
    zv = as_complex(z) if not isinstance(z, np.ndarray) else z
    if np.any(np.abs(zv) >= 1.0):
        raise ValueError(f"{who} requires |z| < 1")
    return zv


def kernel_eval(kind: KernelKind, z) -> float:
    """Evaluate one of the boundary kernels at a point of the open disk.

    P(z)  = (1 - |z|^2) / |1 - z|^2
    H0(z) = (1 - |z|^2) P(z) / 2
    K2(z) = (1 - |z|^2)^3 / (2 |1 - z|^4)
    F0(z) = H0(z) + K2(z)

    Accepts a complex scalar, a DiskPoint, or an ndarray of points.
    """
    zv = _require_open(z, "kernel_eval")
    one_minus = 1.0 - np.abs(zv) ** 2
    d2 = np.abs(1.0 - zv) ** 2
    if kind is KernelKind.POISSON:
        out = one_minus / d2
    elif kind is KernelKind.H0:
        out = 0.5 * one_minus**2 / d2
    elif kind is KernelKind.K2:
        out = 0.5 * one_minus**3 / d2**2
    elif kind is KernelKind.F0:
        out = 0.5 * one_minus**2 / d2 + 0.5 * one_minus**3 / d2**2
    else:
        raise ValueError(f"unknown kernel kind {kind!r}")
    if np.ndim(out) == 0:
        return float(out)
    return out


def green(z, w) -> float:
    """Biharmonic Green function of the unit disk.

    G(z, w) = |z - w|^2 log |(1 - z conj(w)) / (z - w)|^2
              - (1 - |z|^2)(1 - |w|^2)

    Defined on the closed disk; vanishes (with its normal derivative)
    when either argument reaches the circle.  The diagonal w = z is the
    removable limit -(1 - |z|^2)^2.  ``w`` may be an ndarray.
    """
    zv = as_complex(z) if not isinstance(z, np.ndarray) else z
    wv = w if isinstance(w, np.ndarray) else as_complex(w)
    d2 = np.abs(zv - wv) ** 2
    num = np.abs(1.0 - zv * np.conj(wv)) ** 2
    # log(num) - log(d2) instead of log(num/d2): the quotient overflows
    # for subnormal |z - w|^2
    with np.errstate(divide="ignore", invalid="ignore"):
        main = d2 * (np.log(num) - np.log(np.where(d2 == 0.0, 1.0, d2)))
    main = np.where(d2 == 0.0, 0.0, main)
    out = main - (1.0 - np.abs(zv) ** 2) * (1.0 - np.abs(wv) ** 2)
    if np.ndim(out) == 0:
        return float(out)
    return out


def _green_dz(z: complex, w) -> complex:
    """d/dz of G(z, w); vectorized over w, diagonal by its limit."""
    zb = np.conj(z)
    wb = np.conj(w)
    d = z - w
    d2 = np.abs(d) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        log_term = np.log(np.abs(1.0 - z * wb) ** 2) - np.log(np.where(d2 == 0.0, 1.0, d2))
    out = (
        np.conj(d) * log_term
        - d * np.conj(d) * wb / (1.0 - z * wb)
        - np.conj(d)
        + zb * (1.0 - np.abs(w) ** 2)
    )
    # limit of every z-dependent term except the last is 0 as w -> z
    return np.where(d2 == 0.0, zb * (1.0 - abs(z) ** 2), out)


def green_gradient(z, w) -> WirtingerPair:
    """Wirtinger derivatives (G_z, G_zbar) of the Green function in z.

    G is real-valued, so G_zbar = conj(G_z).  The diagonal w = z takes
    the analytic limit G_z = conj(z)(1 - |z|^2).
    """
    zv = _require_open(z, "green_gradient")
    wv = _require_open(w, "green_gradient")
    dz = complex(_green_dz(zv, wv))
    return WirtingerPair(dz=dz, dzbar=np.conj(dz))


def k2_kernel_gradient(z, theta) -> complex:
    """d/dz of the rotated kernel z -> K2(z e^{-i theta}).

    Equals (1-|z|^2)^2 [2 e^{-i theta}(1-|z|^2) - 3 conj(z)(1 - z e^{-i theta})]
    / [2 (1 - conj(z) e^{i theta})^2 (1 - z e^{-i theta})^3].  At z = 0 this
    reduces to e^{-i theta}.  ``theta`` may be an ndarray.
    """
    zv = _require_open(z, "k2_kernel_gradient")
    e = np.exp(-1j * np.asarray(theta, dtype=float))
    zb = np.conj(zv)
    one_minus = 1.0 - abs(zv) ** 2
    num = one_minus**2 * (2.0 * e * one_minus - 3.0 * zb * (1.0 - zv * e))
    den = 2.0 * (1.0 - zb * np.conj(e)) ** 2 * (1.0 - zv * e) ** 3
    out = num / den
    if np.ndim(out) == 0:
        return complex(out)
    return out


def poisson_kernel_gradient(z, theta) -> complex:
    """d/dz of the rotated kernel z -> P(z e^{-i theta}).

    Equals e^{-i theta} / (1 - z e^{-i theta})^2; the conjugate gives the
    zbar-derivative since the kernel is real-valued.
    """
    zv = _require_open(z, "poisson_kernel_gradient")
    e = np.exp(-1j * np.asarray(theta, dtype=float))
    out = e / (1.0 - zv * e) ** 2
    if np.ndim(out) == 0:
        return complex(out)
    return out


def i_alpha(alpha: float, z) -> float:
    """Normalization series sum_n (Gamma(n+alpha) / (n! Gamma(alpha)))^2 |z|^{2n}.

    Terms follow the multiplicative recurrence t_{n+1} = t_n ((n+alpha)/(n+1))^2,
    which avoids Gamma overflow; summation stops once a term drops below
    1e-16 of the running sum.  For alpha = 2 the value is the closed form
    (1 + |z|^2) / (1 - |z|^2)^3.
    """
    if not alpha > 0:
        raise ValueError("i_alpha requires alpha > 0")
    zv = _require_open(z, "i_alpha")
    x = abs(zv) ** 2
    term = 1.0
    total = 1.0
    n = 0
    while True:
        term *= ((n + alpha) / (n + 1)) ** 2 * x
        if term < 1e-16 * total:
            break
        total += term
        n += 1
        if n > 100_000:  # unreachable for |z| < 1
            raise RuntimeError("i_alpha series failed to converge")
    return total


def j_integral(theta: float, r: float) -> float:
    """Partial angular integral of the K2 kernel profile.

    J(theta) = integral_0^theta (1-r^2)^3 / (1 + r^2 - 2 r cos(phi))^2 dphi,
    in closed form

        2 r (1-r^2) sin(theta) / (1 + r^2 - 2 r cos(theta))
        + 2 (1+r^2) arctan((1+r) tan(theta/2) / (1-r)),

    with the endpoint value J(pi) = pi (1 + r^2) taken for theta within
    1e-9 of pi (removable tan singularity).
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError("j_integral requires theta in [0, pi]")
    if not 0.0 <= r < 1.0:
        raise ValueError("j_integral requires r in [0, 1)")
    if theta > math.pi - _J_LIMIT_BAND:
        return math.pi * (1.0 + r * r)
    first = 2.0 * r * (1.0 - r * r) * math.sin(theta) / (1.0 + r * r - 2.0 * r * math.cos(theta))
    second = 2.0 * (1.0 + r * r) * math.atan((1.0 + r) * math.tan(theta / 2.0) / (1.0 - r))
    return first + second
