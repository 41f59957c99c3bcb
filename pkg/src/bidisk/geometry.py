"""Disk points and the matrix statistics of Wirtinger derivative pairs."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "DiskPoint",
    "WirtingerPair",
    "DerivativeSummary",
    "derivative_stats",
    "as_complex",
]


@dataclass(frozen=True)
class DiskPoint:
    """A point of the unit disk, tagged with the closure it must respect."""

    re: float
    im: float
    closure: str = "open"

    def __post_init__(self) -> None:
        if self.closure not in ("open", "closed"):
            raise ValueError(f"closure must be 'open' or 'closed', got {self.closure!r}")
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("disk point coordinates must be finite")
        rr = self.re * self.re + self.im * self.im
        if self.closure == "open":
            if not rr < 1.0:
                raise ValueError(f"point with |z|^2 = {rr} is not in the open unit disk")
        elif not rr <= 1.0:
            raise ValueError(f"point with |z|^2 = {rr} is not in the closed unit disk")

    @classmethod
    def of(cls, z: complex, closure: str = "open") -> "DiskPoint":
        z = complex(z)
        return cls(z.real, z.imag, closure)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


def as_complex(z) -> complex:
    """Coerce a DiskPoint or any complex-like value to a plain complex."""
    if isinstance(z, DiskPoint):
        return z.z
    return complex(z)


@dataclass(frozen=True)
class WirtingerPair:
    """A value of (d/dz, d/dzbar) at one point."""

    dz: complex
    dzbar: complex

    def __post_init__(self) -> None:
        if not (cmath.isfinite(self.dz) and cmath.isfinite(self.dzbar)):
            raise ValueError("Wirtinger derivatives must be finite")


@dataclass(frozen=True)
class DerivativeSummary:
    """Singular-value statistics of the real 2x2 differential.

    ``norm`` is the largest singular value |dz| + |dzbar|, ``lam`` the
    smallest ||dz| - |dzbar||, and ``jacobian`` the determinant
    |dz|^2 - |dzbar|^2.
    """

    norm: float
    lam: float
    jacobian: float


def derivative_stats(w: WirtingerPair) -> DerivativeSummary:
    """Largest/smallest singular value and Jacobian of a derivative pair."""
    a = abs(w.dz)
    b = abs(w.dzbar)
    # factored form keeps |jacobian| = norm * lam exact in floating point
    return DerivativeSummary(norm=a + b, lam=abs(a - b), jacobian=(a - b) * (a + b))
