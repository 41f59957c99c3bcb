"""Landau radius solvers: univalence radius r0 and covered-disk radius R0.

Both variants reduce to a scalar root of a strictly monotone residual on
(0, 1), solved by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .talpha import t2_gradient_deviation_bound

__all__ = ["LandauResult", "landau_t2", "sigma_eval", "landau_ibdp"]

_BRACKET_LO = 1e-9
_BRACKET_HI = 1.0 - 1e-9


@dataclass(frozen=True)
class LandauResult:
    """Solved univalence radius with its residual and covered-disk bound."""

    r0: float
    residual: float
    r0_bracket: tuple[float, float]
    R0_lower: float


def _bisect(residual: Callable[[float], float], lo: float, hi: float) -> tuple[float, tuple[float, float]]:
    f_lo = residual(lo)
    f_hi = residual(hi)
    if f_lo == 0.0:
        return lo, (lo, hi)
    if f_hi == 0.0:
        return hi, (lo, hi)
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError("residual has no sign change on (0, 1)")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = residual(mid)
        if f_mid == 0.0:
            return mid, (lo, hi)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if hi - lo < 1e-14:
            break
    mid = 0.5 * (lo + hi)
    best = min((lo, mid, hi), key=lambda r: abs(residual(r)))
    return best, (lo, hi)


def landau_t2(m_sup: float) -> LandauResult:
    """Univalence radius for a bounded field with unit Jacobian at the origin.

    r0 solves pi/(4M) = (4 M r / (pi (1-r)^3)) (-r^3 + 3 r^2 - 3 r + 3),
    whose right side is the gradient-deviation bound; the image then
    covers a disk of radius at least
    (4 M r0^2 / (pi (1-r0)^3)) (-(4/5) r0^3 + (9/4) r0^2 - 2 r0 + 3/2).
    Requires M >= pi/4 (smaller sup norms are incompatible with a unit
    Jacobian at the origin).
    """
    if m_sup < math.pi / 4.0:
        raise ValueError("landau_t2 requires m_sup >= pi/4")

    def residual(r: float) -> float:
        return math.pi / (4.0 * m_sup) - t2_gradient_deviation_bound(m_sup, r)

    r0, bracket = _bisect(residual, _BRACKET_LO, _BRACKET_HI)
    r0_lower = (
        4.0
        * m_sup
        * r0**2
        / (math.pi * (1.0 - r0) ** 3)
        * (-(4.0 / 5.0) * r0**3 + (9.0 / 4.0) * r0**2 - 2.0 * r0 + 1.5)
    )
    return LandauResult(r0=r0, residual=residual(r0), r0_bracket=bracket, R0_lower=r0_lower)


def sigma_eval(m1: float, m2: float, m3: float, r: float) -> float:
    """Gradient-deviation envelope sigma(r) of the full boundary-value problem.

    sigma(r) = (M1 + M2 + (101/120) M3) r
             + (2 M2 r / pi) [ (2-r)(1+r^2)/(1-r)^2 + r ]
             + (4 M1 r / (pi (1-r)^3)) (-r^3 + 3 r^2 - 3 r + 3).
    """
    if min(m1, m2, m3) < 0:
        raise ValueError("sigma_eval requires nonnegative constants")
    if not 0.0 <= r < 1.0:
        raise ValueError("sigma_eval requires r in [0, 1)")
    out = (m1 + m2 + 101.0 / 120.0 * m3) * r
    out += 2.0 * m2 * r / math.pi * ((2.0 - r) * (1.0 + r * r) / (1.0 - r) ** 2 + r)
    out += 4.0 * m1 * r / (math.pi * (1.0 - r) ** 3) * (-(r**3) + 3.0 * r**2 - 3.0 * r + 3.0)
    return out


def landau_ibdp(m1: float, m2: float, m3: float) -> LandauResult:
    """Univalence radius for normalized solutions with data bounds (M1, M2, M3).

    r0 solves ((4/pi) M1 + (2/pi) M2 + (23/48) M3) sigma(r0) = 1 (sigma is
    increasing, so the root is unique); the image of the r0-disk covers a
    disk of radius at least r0 / ((8/pi) M1 + (4/pi) M2 + (23/24) M3).
    """
    if min(m1, m2, m3) < 0:
        raise ValueError("landau_ibdp requires nonnegative constants")
    if m1 == m2 == m3 == 0:
        raise ValueError("landau_ibdp requires at least one positive constant")
    amp = 4.0 / math.pi * m1 + 2.0 / math.pi * m2 + 23.0 / 48.0 * m3

    def residual(r: float) -> float:
        return amp * sigma_eval(m1, m2, m3, r) - 1.0

    r0, bracket = _bisect(residual, _BRACKET_LO, _BRACKET_HI)
    r0_lower = r0 / (8.0 / math.pi * m1 + 4.0 / math.pi * m2 + 23.0 / 24.0 * m3)
    return LandauResult(r0=r0, residual=residual(r0), r0_bracket=bracket, R0_lower=r0_lower)
