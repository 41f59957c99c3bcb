"""Boundary and source data classes with sup-norm estimation.

Boundary data lives on the unit circle in one of three forms: a finite
Fourier expansion, a two-arc step (one value on the upper half circle,
another on the lower), or uniform samples (interpreted as the trig
interpolant).  Source data on the disk is constant, a polynomial in
|w|^2, or a bivariate polynomial in (Re w, Im w).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

__all__ = [
    "BoundaryFunction",
    "SourceFunction",
    "SupNorms",
    "sup_norm",
    "boundary_sum_sup",
    "MAX_FOURIER_DEGREE",
]

MAX_FOURIER_DEGREE = 64
_SUP_SAFETY = 1.001  # estimated (grid-based) sup norms are inflated by this
_CIRCLE_SUP_SAMPLES = 4096
_SOURCE_SUP_GRID = (128, 256)  # radii x angles


@dataclass(frozen=True)
class BoundaryFunction:
    """A function on the unit circle in Fourier, two-arc, or sampled form."""

    kind: str
    fourier_coeffs: tuple[tuple[int, complex], ...] | None = None
    upper: complex | None = None
    lower: complex | None = None
    sample_values: tuple[complex, ...] | None = None

    @classmethod
    def fourier(cls, coeffs: Mapping[int, complex]) -> "BoundaryFunction":
        items = []
        for k, c in sorted(coeffs.items()):
            k = int(k)
            c = complex(c)
            if abs(k) > MAX_FOURIER_DEGREE:
                raise ValueError(f"fourier degree {k} exceeds cap {MAX_FOURIER_DEGREE}")
            if not cmath.isfinite(c):
                raise ValueError("fourier coefficients must be finite")
            items.append((k, c))
        return cls(kind="fourier", fourier_coeffs=tuple(items))

    @classmethod
    def two_arc(cls, upper: complex, lower: complex) -> "BoundaryFunction":
        upper, lower = complex(upper), complex(lower)
        if not (cmath.isfinite(upper) and cmath.isfinite(lower)):
            raise ValueError("two-arc values must be finite")
        return cls(kind="two_arc", upper=upper, lower=lower)

    @classmethod
    def samples(cls, values: Sequence[complex]) -> "BoundaryFunction":
        vals = tuple(complex(v) for v in values)
        n = len(vals)
        if n < 64 or n & (n - 1):
            raise ValueError("sample count must be a power of two, at least 64")
        if not all(cmath.isfinite(v) for v in vals):
            raise ValueError("sample values must be finite")
        return cls(kind="samples", sample_values=vals)

    @classmethod
    def zero(cls) -> "BoundaryFunction":
        return cls.fourier({})

    def breakpoints(self) -> tuple[float, ...]:
        """Angles where the data is discontinuous."""
        if self.kind == "two_arc":
            return (0.0, math.pi)
        return ()

    def modes(self) -> dict[int, complex] | None:
        """Exact finite Fourier expansion, or None for two-arc data."""
        return _boundary_modes(self)

    def mean(self) -> complex:
        """Average over the circle (the degree-0 Fourier coefficient)."""
        if self.kind == "two_arc":
            return 0.5 * (self.upper + self.lower)
        return self.modes().get(0, 0j)

    def evaluate(self, theta) -> complex:
        """Value at angle ``theta`` (scalar or ndarray)."""
        th = np.asarray(theta, dtype=float)
        if self.kind == "two_arc":
            up = np.mod(th, 2.0 * math.pi) < math.pi
            out = np.where(up, self.upper, self.lower)
        else:
            out = np.zeros_like(th, dtype=complex)
            for k, c in self.modes().items():
                out = out + c * np.exp(1j * k * th)
        if np.ndim(out) == 0:
            return complex(out)
        return out


@lru_cache(maxsize=4096)
def _boundary_modes(b: BoundaryFunction) -> dict[int, complex] | None:
    if b.kind == "fourier":
        return {k: c for k, c in b.fourier_coeffs if c != 0}
    if b.kind == "samples":
        vals = np.asarray(b.sample_values, dtype=complex)
        n = len(vals)
        spec = np.fft.fft(vals) / n
        modes: dict[int, complex] = {}
        for k in range(-(n // 2), n // 2 + 1):
            if abs(k) == n // 2:
                c = 0.5 * spec[n // 2]  # split the Nyquist mode symmetrically
            else:
                c = spec[k % n]
            if c != 0:
                modes[k] = complex(c)
        return modes
    return None


@dataclass(frozen=True)
class SourceFunction:
    """A closed-form source term on the closed unit disk."""

    kind: str
    value: complex = 0j
    radial_coeffs: tuple[complex, ...] = ()
    poly_terms: tuple[tuple[int, int, complex], ...] = ()

    @classmethod
    def constant(cls, value: complex) -> "SourceFunction":
        value = complex(value)
        if not cmath.isfinite(value):
            raise ValueError("constant source must be finite")
        return cls(kind="constant", value=value)

    @classmethod
    def radial(cls, coeffs: Sequence[complex]) -> "SourceFunction":
        cs = tuple(complex(c) for c in coeffs)
        if not all(cmath.isfinite(c) for c in cs):
            raise ValueError("radial coefficients must be finite")
        return cls(kind="radial", radial_coeffs=cs)

    @classmethod
    def poly(cls, terms: Sequence[tuple[int, int, complex]]) -> "SourceFunction":
        out = []
        for i, j, c in terms:
            i, j, c = int(i), int(j), complex(c)
            if i < 0 or j < 0 or i + j > 6:
                raise ValueError("poly terms must have 0 <= i+j <= 6")
            if not cmath.isfinite(c):
                raise ValueError("poly coefficients must be finite")
            out.append((i, j, c))
        return cls(kind="poly", poly_terms=tuple(out))

    @classmethod
    def zero(cls) -> "SourceFunction":
        return cls.constant(0j)

    def is_zero(self) -> bool:
        return all(c == 0 for _, c in self.monomials().items())

    def monomials(self) -> dict[tuple[int, int], complex]:
        """Expansion into w^a conj(w)^b monomials."""
        return _source_monomials(self)

    def evaluate(self, w) -> complex:
        """Value at a point ``w`` (scalar or ndarray)."""
        wv = np.asarray(w, dtype=complex)
        out = np.zeros_like(wv)
        wb = np.conj(wv)
        for (a, b), c in self.monomials().items():
            out = out + c * wv**a * wb**b
        if np.ndim(out) == 0:
            return complex(out)
        return out


@lru_cache(maxsize=4096)
def _source_monomials(g: SourceFunction) -> dict[tuple[int, int], complex]:
    if g.kind == "constant":
        return {(0, 0): g.value} if g.value != 0 else {}
    if g.kind == "radial":
        return {(m, m): c for m, c in enumerate(g.radial_coeffs) if c != 0}
    # poly: x^i y^j with x = (w + wb)/2, y = (w - wb)/(2i)
    out: dict[tuple[int, int], complex] = {}
    for i, j, c in g.poly_terms:
        term = {(0, 0): c}
        for _ in range(i):
            term = _mono_mul(term, {(1, 0): 0.5, (0, 1): 0.5})
        for _ in range(j):
            term = _mono_mul(term, {(1, 0): -0.5j, (0, 1): 0.5j})
        for key, val in term.items():
            out[key] = out.get(key, 0j) + val
    return {k: v for k, v in out.items() if v != 0}


def _mono_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, int], complex] = {}
    for (p, q), u in a.items():
        for (r, s), v in b.items():
            key = (p + r, q + s)
            out[key] = out.get(key, 0j) + u * v
    return out


@dataclass(frozen=True)
class SupNorms:
    """Safe over-estimates of the three data sup norms of a problem."""

    f_sup: float
    fh_sup: float
    g_sup: float

    def __post_init__(self) -> None:
        if min(self.f_sup, self.fh_sup, self.g_sup) < 0:
            raise ValueError("sup norms must be nonnegative")


@lru_cache(maxsize=4096)
def sup_norm(fn) -> float:
    """Sup-norm estimate of boundary or source data.

    Exact for constant and two-arc variants.  Grid-estimated otherwise
    (4096 circle angles for boundary data, a 128 x 256 polar grid for
    sources) and inflated by a 1.001 safety factor.
    """
    if isinstance(fn, BoundaryFunction):
        if fn.kind == "two_arc":
            return max(abs(fn.upper), abs(fn.lower))
        theta = 2.0 * math.pi * np.arange(_CIRCLE_SUP_SAMPLES) / _CIRCLE_SUP_SAMPLES
        return float(np.max(np.abs(fn.evaluate(theta)))) * _SUP_SAFETY
    if isinstance(fn, SourceFunction):
        if fn.kind == "constant":
            return abs(fn.value)
        nr, nt = _SOURCE_SUP_GRID
        r = np.linspace(0.0, 1.0, nr)
        th = 2.0 * math.pi * np.arange(nt) / nt
        grid = r[:, None] * np.exp(1j * th)[None, :]
        return float(np.max(np.abs(fn.evaluate(grid)))) * _SUP_SAFETY
    raise TypeError(f"sup_norm expects BoundaryFunction or SourceFunction, got {type(fn)!r}")


def boundary_sum_sup(f: BoundaryFunction, h: BoundaryFunction) -> float:
    """Sup-norm estimate of the pointwise sum f + h on the circle."""
    if f.kind == "two_arc" and h.kind == "two_arc":
        return max(abs(f.upper + h.upper), abs(f.lower + h.lower))
    theta = 2.0 * math.pi * np.arange(_CIRCLE_SUP_SAMPLES) / _CIRCLE_SUP_SAMPLES
    vals = np.abs(np.asarray(f.evaluate(theta)) + np.asarray(h.evaluate(theta)))
    return float(np.max(vals)) * _SUP_SAFETY
