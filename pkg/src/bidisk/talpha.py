"""Series machinery for T_alpha-harmonic functions.

A T_alpha-harmonic function on the disk expands as

    u(z) = sum_{k>=0} c_k F(-a/2, k-a/2; k+1; |z|^2) z^k
         + sum_{k>=1} c_{-k} F(-a/2, k-a/2; k+1; |z|^2) conj(z)^k

with F the Gauss hypergeometric series.  alpha = 0 gives harmonic
functions (all F factors are 1); alpha = 2 gives the class reproduced
by the K2 kernel, where F(-1, k-1; k+1; w) = 1 - (k-1) w / (k+1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .geometry import WirtingerPair, as_complex

__all__ = [
    "CoefficientSequence",
    "gauss_hypergeometric",
    "t_alpha_eval",
    "t2_derivatives",
    "t2_coefficient_extract",
    "t2_field_sup",
    "CoefficientBoundRow",
    "CoefficientBoundReport",
    "coefficient_bound_check",
    "t2_gradient_deviation_bound",
]

MAX_SEQUENCE_DEGREE = 64


@dataclass(frozen=True)
class CoefficientSequence:
    """Two-sided coefficient sequence of a T_alpha expansion."""

    alpha: float
    coeffs: tuple[tuple[int, complex], ...]

    @classmethod
    def of(cls, alpha: float, coeffs: Mapping[int, complex]) -> "CoefficientSequence":
        items = []
        for k, c in sorted(coeffs.items()):
            k = int(k)
            c = complex(c)
            if abs(k) > MAX_SEQUENCE_DEGREE:
                raise ValueError(f"degree {k} exceeds cap {MAX_SEQUENCE_DEGREE}")
            if not cmath.isfinite(c):
                raise ValueError("coefficients must be finite")
            if c != 0:
                items.append((k, c))
        return cls(alpha=float(alpha), coeffs=tuple(items))

    def as_dict(self) -> dict[int, complex]:
        return dict(self.coeffs)

    def __getitem__(self, k: int) -> complex:
        return dict(self.coeffs).get(k, 0j)


def gauss_hypergeometric(a: float, b: float, c: float, x):
    """Gauss hypergeometric series F(a, b; c; x) for real parameters.

    Summed by the Pochhammer term recurrence, truncated when a term falls
    below 1e-16 of the running partial sum.  Terminates exactly when a or
    b is a nonpositive integer, in which case x = 1 is also admitted.
    ``x`` may be an ndarray in [0, 1) (or [0, 1] for terminating series).
    """
    if c <= 0 and c == int(c):
        raise ValueError("hypergeometric parameter c must not be a nonpositive integer")
    terminating = (a <= 0 and a == int(a)) or (b <= 0 and b == int(b))
    xv = np.asarray(x, dtype=float)
    if np.any(xv < 0) or np.any(xv > 1) or (not terminating and np.any(xv >= 1)):
        raise ValueError("hypergeometric argument must lie in [0, 1), or [0, 1] if terminating")
    total = np.ones_like(xv)
    term = np.ones_like(xv)
    n = 0
    while True:
        if terminating and (a + n == 0 or b + n == 0):
            break
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1))) * xv
        if not terminating and np.max(np.abs(term)) < 1e-16 * np.max(np.abs(total)):
            break
        total = total + term
        n += 1
        if n > 100_000:
            raise RuntimeError("hypergeometric series failed to converge")
    if np.ndim(total) == 0:
        return float(total)
    return total


def _factor(alpha: float, m: int, x):
    """Radial factor F(-alpha/2, m - alpha/2; m + 1; x) of the degree-m term."""
    if alpha == 2.0:
        return 1.0 - (m - 1) * x / (m + 1)
    return gauss_hypergeometric(-alpha / 2.0, m - alpha / 2.0, m + 1.0, x)


def t_alpha_eval(s: CoefficientSequence, z):
    """Evaluate the expansion of ``s`` at z (scalar or ndarray, |z| < 1)."""
    zv = np.asarray(z, dtype=complex) if isinstance(z, np.ndarray) else as_complex(z)
    if np.any(np.abs(zv) >= 1.0):
        raise ValueError("t_alpha_eval requires |z| < 1")
    x = np.abs(zv) ** 2
    zb = np.conj(zv)
    out = np.zeros_like(np.asarray(zv))
    for k, c in s.coeffs:
        m = abs(k)
        out = out + c * _factor(s.alpha, m, x) * (zv**m if k >= 0 else zb**m)
    if np.ndim(out) == 0:
        return complex(out)
    return out


def t2_derivatives(s: CoefficientSequence, z) -> WirtingerPair:
    """Termwise Wirtinger derivatives of an alpha = 2 expansion at z.

    Each degree-m term is (c/(m+1)) [(m+1) u^m - (m-1) u^{m+1} conj(u)]
    with u = z for k >= 0 and u = conj(z) for k < 0; differentiation is
    exact, no quadrature involved.
    """
    if s.alpha != 2.0:
        raise ValueError("t2_derivatives requires alpha = 2")
    zv = as_complex(z)
    if abs(zv) >= 1.0:
        raise ValueError("t2_derivatives requires |z| < 1")
    zb = np.conj(zv)
    dz = 0j
    dzb = 0j
    for k, c in s.coeffs:
        m = abs(k)
        ratio = (m - 1) / (m + 1)
        lead = m * (zv ** (m - 1) if k >= 0 else zb ** (m - 1)) if m >= 1 else 0j
        if k >= 0:
            dz += c * (lead - (m - 1) * zv**m * zb)
            dzb += c * (-ratio) * zv ** (m + 1)
        else:
            dzb += c * (lead - (m - 1) * zb**m * zv)
            dz += c * (-ratio) * zb ** (m + 1)
    return WirtingerPair(dz=complex(dz), dzbar=complex(dzb))


def t2_coefficient_extract(
    field: Callable[[complex], complex],
    radius: float = 0.5,
    degree: int = 32,
) -> CoefficientSequence:
    """Recover alpha = 2 coefficients from field values on one circle.

    Samples the field at 4*degree uniform angles on |z| = radius, takes
    the FFT, and divides each mode by its radial factor
    F(-1, |k|-1; |k|+1; radius^2) radius^{|k|}.  Round-trips with
    t_alpha_eval for fields of degree at most ``degree``.
    """
    if not 0.0 < radius < 1.0:
        raise ValueError("extraction radius must lie in (0, 1)")
    if degree < 1:
        raise ValueError("extraction degree must be positive")
    n = 4 * degree
    theta = 2.0 * math.pi * np.arange(n) / n
    pts = radius * np.exp(1j * theta)
    vals = np.asarray([field(p) for p in pts], dtype=complex)
    spec = np.fft.fft(vals) / n
    coeffs: dict[int, complex] = {}
    x = radius * radius
    for k in range(-degree, degree + 1):
        mode = spec[k % n]
        m = abs(k)
        c = complex(mode / (_factor(2.0, m, x) * radius**m))
        if c != 0:
            coeffs[k] = c
    return CoefficientSequence.of(2.0, coeffs)


def t2_field_sup(field: CoefficientSequence | Callable[[complex], complex]) -> float:
    """Sup estimate of a disk field: 8192 samples on |z| = 0.999, times 1.001."""
    theta = 2.0 * math.pi * np.arange(8192) / 8192
    pts = 0.999 * np.exp(1j * theta)
    if isinstance(field, CoefficientSequence):
        vals = t_alpha_eval(field, pts)
    else:
        vals = np.asarray([field(p) for p in pts], dtype=complex)
    return float(np.max(np.abs(vals))) * 1.001


@dataclass(frozen=True)
class CoefficientBoundRow:
    k: int
    weighted: float  # (|c_k| + |c_{-k}|) F(-1, k-1; k+1; 1) = (|c_k| + |c_{-k}|) 2/(k+1)
    limit: float     # 4 M / pi
    raw_sum: float   # |c_k| + |c_{-k}|
    raw_limit: float  # 2 M (k+1) / pi
    holds: bool


@dataclass(frozen=True)
class CoefficientBoundReport:
    c0_value: float  # 2 |c_0| = |c_0 F(-1,-1;1;1)|
    c0_limit: float  # M
    c0_holds: bool
    rows: tuple[CoefficientBoundRow, ...]
    all_hold: bool


def coefficient_bound_check(
    s: CoefficientSequence,
    m_sup: float,
    slack: float = 1e-9,
) -> CoefficientBoundReport:
    """Check the coefficient bounds of a bounded alpha = 2 field.

    For each k >= 1 the weighted sum (|c_k| + |c_{-k}|) 2/(k+1) must not
    exceed 4 M / pi (equivalently |c_k| + |c_{-k}| <= 2 M (k+1) / pi), and
    the mean term must satisfy 2 |c_0| <= M; M is a sup bound on the field.
    """
    if s.alpha != 2.0:
        raise ValueError("coefficient_bound_check requires alpha = 2")
    d = s.as_dict()
    kmax = max((abs(k) for k in d), default=0)
    rows = []
    ok = True
    for k in range(1, kmax + 1):
        raw = abs(d.get(k, 0j)) + abs(d.get(-k, 0j))
        weighted = raw * 2.0 / (k + 1)
        limit = 4.0 * m_sup / math.pi
        holds = weighted <= limit + slack
        ok = ok and holds
        rows.append(
            CoefficientBoundRow(
                k=k,
                weighted=weighted,
                limit=limit,
                raw_sum=raw,
                raw_limit=2.0 * m_sup * (k + 1) / math.pi,
                holds=holds,
            )
        )
    c0_value = 2.0 * abs(d.get(0, 0j))
    c0_holds = c0_value <= m_sup + slack
    ok = ok and c0_holds
    return CoefficientBoundReport(
        c0_value=c0_value,
        c0_limit=m_sup,
        c0_holds=c0_holds,
        rows=tuple(rows),
        all_hold=ok,
    )


def t2_gradient_deviation_bound(m_sup: float, r: float) -> float:
    """Bound on |u_z(z)-u_z(0)| + |u_zbar(z)-u_zbar(0)| for sup-M fields.

    Equals (4 M r / (pi (1-r)^3)) (-r^3 + 3 r^2 - 3 r + 3); strictly
    increasing in r on [0, 1).
    """
    if m_sup < 0:
        raise ValueError("m_sup must be nonnegative")
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0, 1)")
    return 4.0 * m_sup * r / (math.pi * (1.0 - r) ** 3) * (-(r**3) + 3.0 * r**2 - 3.0 * r + 3.0)
