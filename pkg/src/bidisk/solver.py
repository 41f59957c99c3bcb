"""Solver for the inhomogeneous biharmonic Dirichlet problem on the disk.

The solution with boundary value f, inward normal derivative h, and
source g is assembled as

    Phi(z) = (1 - |z|^2) P[f+h](z) / 2 + K2[f](z) - G[g](z),

equivalently F0[f] + H0[h] - G[g].  Boundary transforms of data with a
finite Fourier expansion are evaluated through exact per-mode responses
(P maps e^{ik.} to z^k, K2 maps it to ((|k|+1) - (|k|-1)|z|^2) z^k / 2);
two-arc data goes through per-arc quadrature.  The Green potential is
offered both as the defining disk-quadrature mean and as an exact
closed form built from a polynomial particular solution corrected by
its own biharmonic boundary extension; the solver uses the exact form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .functions import BoundaryFunction, SourceFunction, SupNorms, boundary_sum_sup, sup_norm
from .geometry import WirtingerPair, as_complex
from .kernels import (
    KernelKind,
    _green_dz,
    green,
    k2_kernel_gradient,
    kernel_eval,
    poisson_kernel_gradient,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, circle_mean, disk_mean

__all__ = [
    "BiharmonicProblem",
    "problem_norms",
    "boundary_transform",
    "boundary_transform_gradient",
    "green_potential",
    "green_potential_exact",
    "green_potential_gradient",
    "green_potential_gradient_quadrature",
    "solve_at",
    "solve_wirtinger",
    "pde_residual",
    "problem_from_json",
    "problem_to_json",
]


@dataclass(frozen=True)
class BiharmonicProblem:
    """Data triple (f, h, g) plus the quadrature configuration."""

    f: BoundaryFunction
    h: BoundaryFunction
    g: SourceFunction
    quad: QuadratureConfig = DEFAULT_CONFIG


def problem_norms(p: BiharmonicProblem) -> SupNorms:
    """Safe sup-norm estimates (f, f + h, g) for a problem."""
    return SupNorms(
        f_sup=sup_norm(p.f),
        fh_sup=boundary_sum_sup(p.f, p.h),
        g_sup=sup_norm(p.g),
    )


def _require_open(z, who: str) -> complex:
    zv = as_complex(z)
    if abs(zv) >= 1.0:
        raise ValueError(f"{who} requires |z| < 1")
    return zv


# ---------------------------------------------------------------------------
# boundary transforms
# ---------------------------------------------------------------------------

def _mode_value(kind: KernelKind, k: int, z: complex) -> complex:
    """Kernel transform of the circle mode e^{ik theta} at z."""
    m = abs(k)
    zm = z**m if k >= 0 else np.conj(z) ** m
    x = abs(z) ** 2
    if kind is KernelKind.POISSON:
        return zm
    if kind is KernelKind.H0:
        return 0.5 * (1.0 - x) * zm
    if kind is KernelKind.K2:
        return 0.5 * ((m + 1) - (m - 1) * x) * zm
    if kind is KernelKind.F0:
        return 0.5 * (1.0 - x) * zm + 0.5 * ((m + 1) - (m - 1) * x) * zm
    raise ValueError(f"unknown kernel kind {kind!r}")


def boundary_transform(
    kind: KernelKind,
    b: BoundaryFunction,
    z,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> complex:
    """Kernel transform (1/2pi) integral of kernel(z e^{-i theta}) b(e^{i theta}).

    Data with an exact finite Fourier expansion is transformed mode by
    mode in closed form; two-arc data is integrated per arc.
    """
    zv = _require_open(z, "boundary_transform")
    modes = b.modes()
    if modes is not None:
        return complex(sum(c * _mode_value(kind, k, zv) for k, c in modes.items()))
    return circle_mean(
        lambda th: kernel_eval(kind, zv * np.exp(-1j * th)) * b.evaluate(th),
        cfg,
        b.breakpoints(),
    )


def _mode_gradient(kind: KernelKind, k: int, z: complex) -> tuple[complex, complex]:
    """(d/dz, d/dzbar) of the per-mode transform at z."""
    m = abs(k)
    zb = np.conj(z)
    if kind is KernelKind.POISSON:
        if k >= 0:
            return (complex(m * z ** (m - 1)) if m >= 1 else 0j), 0j
        return 0j, complex(m * zb ** (m - 1))
    if kind is KernelKind.K2:
        # response is (m+1) u^m / 2 - (m-1) u^{m+1} conj(u) / 2 with u = z or zbar
        lead = 0.5 * (m + 1) * m * z ** (m - 1) if m >= 1 else 0j
        cross_same = -0.5 * (m - 1) * (m + 1) * z**m * zb
        cross_other = -0.5 * (m - 1) * z ** (m + 1)
        if k >= 0:
            return complex(lead + cross_same), complex(cross_other)
        lead_b = 0.5 * (m + 1) * m * zb ** (m - 1) if m >= 1 else 0j
        cross_same_b = -0.5 * (m - 1) * (m + 1) * zb**m * z
        cross_other_b = -0.5 * (m - 1) * zb ** (m + 1)
        return complex(cross_other_b), complex(lead_b + cross_same_b)
    raise ValueError("gradients are provided for the Poisson and K2 kernels only")


def boundary_transform_gradient(
    kind: KernelKind,
    b: BoundaryFunction,
    z,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> WirtingerPair:
    """Wirtinger derivatives of the Poisson or K2 transform of ``b`` at z."""
    if kind not in (KernelKind.POISSON, KernelKind.K2):
        raise ValueError("gradients are provided for the Poisson and K2 kernels only")
    zv = _require_open(z, "boundary_transform_gradient")
    modes = b.modes()
    if modes is not None:
        dz = 0j
        dzb = 0j
        for k, c in modes.items():
            gz, gzb = _mode_gradient(kind, k, zv)
            dz += c * gz
            dzb += c * gzb
        return WirtingerPair(dz=complex(dz), dzbar=complex(dzb))
    grad_kernel = poisson_kernel_gradient if kind is KernelKind.POISSON else k2_kernel_gradient
    dz = circle_mean(lambda th: grad_kernel(zv, th) * b.evaluate(th), cfg, b.breakpoints())
    dzb = circle_mean(
        lambda th: np.conj(grad_kernel(zv, th)) * b.evaluate(th), cfg, b.breakpoints()
    )
    return WirtingerPair(dz=dz, dzbar=dzb)


# ---------------------------------------------------------------------------
# Green potential
# ---------------------------------------------------------------------------

def green_potential(
    g: SourceFunction,
    z,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> complex:
    """Green potential (1/16) of the disk mean of G(z, .) g, by quadrature."""
    zv = _require_open(z, "green_potential")
    if g.is_zero():
        return 0j
    return disk_mean(lambda w: green(zv, w) * g.evaluate(w), cfg) / 16.0


@dataclass(frozen=True)
class _GreenClosedForm:
    """Exact ingredients for the Green potential of a polynomial source.

    ``particular`` is a polynomial with bilaplacian equal to the source;
    the Fourier data of its boundary trace and radial derivative feed the
    biharmonic extension that restores the zero boundary conditions.
    """

    particular: tuple[tuple[tuple[int, int], complex], ...]
    trace_modes: tuple[tuple[int, complex], ...]
    trace_plus_slope_modes: tuple[tuple[int, complex], ...]


@lru_cache(maxsize=1024)
def _green_closed_form(g: SourceFunction) -> _GreenClosedForm:
    particular: dict[tuple[int, int], complex] = {}
    for (a, b), d in g.monomials().items():
        particular[(a + 2, b + 2)] = d / (16.0 * (a + 1) * (a + 2) * (b + 1) * (b + 2))
    trace: dict[int, complex] = {}
    slope: dict[int, complex] = {}
    for (p, q), coef in particular.items():
        k = p - q
        trace[k] = trace.get(k, 0j) - coef  # boundary value the extension must cancel
        slope[k] = slope.get(k, 0j) + (p + q) * coef  # radial derivative counterpart
    trace_plus = {k: trace.get(k, 0j) + slope.get(k, 0j) for k in set(trace) | set(slope)}
    return _GreenClosedForm(
        particular=tuple(sorted(particular.items())),
        trace_modes=tuple(sorted(trace.items())),
        trace_plus_slope_modes=tuple(sorted(trace_plus.items())),
    )


def green_potential_exact(g: SourceFunction, z) -> complex:
    """Green potential of a closed-form source, exactly.

    Combines the polynomial particular solution of the bilaplacian with
    the biharmonic extension of its boundary trace; agrees with the
    quadrature realization to quadrature accuracy.
    """
    zv = _require_open(z, "green_potential_exact")
    if g.is_zero():
        return 0j
    cf = _green_closed_form(g)
    zb = np.conj(zv)
    x = abs(zv) ** 2
    phi = sum(c * zv**p * zb**q for (p, q), c in cf.particular)
    phi += 0.5 * (1.0 - x) * sum(c * _mode_value(KernelKind.POISSON, k, zv) for k, c in cf.trace_plus_slope_modes)
    phi += sum(c * _mode_value(KernelKind.K2, k, zv) for k, c in cf.trace_modes)
    return -complex(phi)


def green_potential_gradient(g: SourceFunction, z) -> WirtingerPair:
    """Exact Wirtinger derivatives of the Green potential."""
    zv = _require_open(z, "green_potential_gradient")
    if g.is_zero():
        return WirtingerPair(0j, 0j)
    cf = _green_closed_form(g)
    zb = np.conj(zv)
    x = abs(zv) ** 2
    dz = 0j
    dzb = 0j
    for (p, q), c in cf.particular:
        dz += c * p * zv ** (p - 1) * zb**q
        dzb += c * q * zv**p * zb ** (q - 1)
    p_val = sum(c * _mode_value(KernelKind.POISSON, k, zv) for k, c in cf.trace_plus_slope_modes)
    p_dz = 0j
    p_dzb = 0j
    for k, c in cf.trace_plus_slope_modes:
        gz, gzb = _mode_gradient(KernelKind.POISSON, k, zv)
        p_dz += c * gz
        p_dzb += c * gzb
    dz += 0.5 * ((1.0 - x) * p_dz - zb * p_val)
    dzb += 0.5 * ((1.0 - x) * p_dzb - zv * p_val)
    for k, c in cf.trace_modes:
        gz, gzb = _mode_gradient(KernelKind.K2, k, zv)
        dz += c * gz
        dzb += c * gzb
    return WirtingerPair(dz=-complex(dz), dzbar=-complex(dzb))


def green_potential_gradient_quadrature(
    g: SourceFunction,
    z,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> WirtingerPair:
    """Wirtinger derivatives of the Green potential by disk quadrature."""
    zv = _require_open(z, "green_potential_gradient_quadrature")
    if g.is_zero():
        return WirtingerPair(0j, 0j)
    dz = disk_mean(lambda w: _green_dz(zv, w) * g.evaluate(w), cfg) / 16.0
    dzb = disk_mean(lambda w: np.conj(_green_dz(zv, w)) * g.evaluate(w), cfg) / 16.0
    return WirtingerPair(dz=dz, dzbar=dzb)


# ---------------------------------------------------------------------------
# solution and derivatives
# ---------------------------------------------------------------------------

def solve_at(p: BiharmonicProblem, z, assembly: str = "split") -> complex:
    """Solution value Phi(z).

    ``assembly`` selects between the default form
    (1-|z|^2) P[f+h]/2 + K2[f] - G[g] ("split") and the equivalent
    F0[f] + H0[h] - G[g] ("direct"); both agree to quadrature accuracy.
    """
    zv = _require_open(z, "solve_at")
    if assembly == "split":
        p_fh = boundary_transform(KernelKind.POISSON, p.f, zv, p.quad) + boundary_transform(
            KernelKind.POISSON, p.h, zv, p.quad
        )
        phi = 0.5 * (1.0 - abs(zv) ** 2) * p_fh + boundary_transform(KernelKind.K2, p.f, zv, p.quad)
    elif assembly == "direct":
        phi = boundary_transform(KernelKind.F0, p.f, zv, p.quad) + boundary_transform(
            KernelKind.H0, p.h, zv, p.quad
        )
    else:
        raise ValueError(f"unknown assembly {assembly!r}")
    return complex(phi - green_potential_exact(p.g, zv))


def solve_wirtinger(p: BiharmonicProblem, z) -> WirtingerPair:
    """Wirtinger derivatives (Phi_z, Phi_zbar) of the solution at z."""
    zv = _require_open(z, "solve_wirtinger")
    zb = np.conj(zv)
    x = abs(zv) ** 2
    p_fh = boundary_transform(KernelKind.POISSON, p.f, zv, p.quad) + boundary_transform(
        KernelKind.POISSON, p.h, zv, p.quad
    )
    gf = boundary_transform_gradient(KernelKind.POISSON, p.f, zv, p.quad)
    gh = boundary_transform_gradient(KernelKind.POISSON, p.h, zv, p.quad)
    k2f = boundary_transform_gradient(KernelKind.K2, p.f, zv, p.quad)
    gg = green_potential_gradient(p.g, zv)
    dz = 0.5 * ((1.0 - x) * (gf.dz + gh.dz) - zb * p_fh) + k2f.dz - gg.dz
    dzb = 0.5 * ((1.0 - x) * (gf.dzbar + gh.dzbar) - zv * p_fh) + k2f.dzbar - gg.dzbar
    return WirtingerPair(dz=complex(dz), dzbar=complex(dzb))


_STENCIL = (
    (0, 0, 20.0),
    (1, 0, -8.0), (-1, 0, -8.0), (0, 1, -8.0), (0, -1, -8.0),
    (1, 1, 2.0), (1, -1, 2.0), (-1, 1, 2.0), (-1, -1, 2.0),
    (2, 0, 1.0), (-2, 0, 1.0), (0, 2, 1.0), (0, -2, 1.0),
)


def pde_residual(p: BiharmonicProblem, z, step: float = 1e-2) -> complex:
    """Bilaplacian residual Delta^2 Phi(z) - g(z) on the 13-point stencil.

    Truncation is O(step^2); requires |z| <= 0.7 with the stencil inside
    |z| < 0.9.
    """
    zv = _require_open(z, "pde_residual")
    if abs(zv) > 0.7:
        raise ValueError("pde_residual requires |z| <= 0.7")
    if step <= 0 or abs(zv) + 2.0 * step >= 0.9:
        raise ValueError("stencil must stay inside |z| < 0.9")
    acc = 0j
    for ix, iy, c in _STENCIL:
        acc += c * solve_at(p, zv + step * (ix + 1j * iy))
    return complex(acc / step**4 - p.g.evaluate(zv))


# ---------------------------------------------------------------------------
# problem JSON
# ---------------------------------------------------------------------------

def _c_from_json(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ValueError(f"expected a number or [re, im] pair, got {v!r}")


def _c_to_json(c: complex) -> list[float]:
    return [c.real, c.imag]


def _boundary_from_json(obj) -> BoundaryFunction:
    kind = obj.get("type")
    if kind == "fourier":
        return BoundaryFunction.fourier(
            {int(k): _c_from_json(v) for k, v in obj.get("coeffs", {}).items()}
        )
    if kind == "two_arc":
        return BoundaryFunction.two_arc(_c_from_json(obj["upper"]), _c_from_json(obj["lower"]))
    if kind == "samples":
        return BoundaryFunction.samples([_c_from_json(v) for v in obj["values"]])
    raise ValueError(f"unknown boundary type {kind!r}")


def _boundary_to_json(b: BoundaryFunction) -> dict:
    if b.kind == "fourier":
        return {"type": "fourier", "coeffs": {str(k): _c_to_json(c) for k, c in b.fourier_coeffs}}
    if b.kind == "two_arc":
        return {"type": "two_arc", "upper": _c_to_json(b.upper), "lower": _c_to_json(b.lower)}
    return {"type": "samples", "values": [_c_to_json(v) for v in b.sample_values]}


def _source_from_json(obj) -> SourceFunction:
    kind = obj.get("type")
    if kind == "constant":
        return SourceFunction.constant(_c_from_json(obj["value"]))
    if kind == "radial":
        return SourceFunction.radial([_c_from_json(v) for v in obj["coeffs"]])
    if kind == "poly":
        return SourceFunction.poly(
            [(t["i"], t["j"], _c_from_json(t["c"])) for t in obj["terms"]]
        )
    raise ValueError(f"unknown source type {kind!r}")


def _source_to_json(g: SourceFunction) -> dict:
    if g.kind == "constant":
        return {"type": "constant", "value": _c_to_json(g.value)}
    if g.kind == "radial":
        return {"type": "radial", "coeffs": [_c_to_json(c) for c in g.radial_coeffs]}
    return {
        "type": "poly",
        "terms": [{"i": i, "j": j, "c": _c_to_json(c)} for i, j, c in g.poly_terms],
    }


def problem_from_json(obj) -> BiharmonicProblem:
    """Build a problem from its JSON object (or a JSON string)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    quad = obj.get("quad", {})
    cfg = QuadratureConfig(
        n_theta=int(quad.get("n_theta", DEFAULT_CONFIG.n_theta)),
        n_radial=int(quad.get("n_radial", DEFAULT_CONFIG.n_radial)),
        per_arc=bool(quad.get("per_arc", DEFAULT_CONFIG.per_arc)),
    )
    return BiharmonicProblem(
        f=_boundary_from_json(obj["f"]),
        h=_boundary_from_json(obj["h"]),
        g=_source_from_json(obj["g"]),
        quad=cfg,
    )


def problem_to_json(p: BiharmonicProblem) -> dict:
    """JSON object for a problem (inverse of problem_from_json)."""
    return {
        "f": _boundary_to_json(p.f),
        "h": _boundary_to_json(p.h),
        "g": _source_to_json(p.g),
        "quad": {
            "n_theta": p.quad.n_theta,
            "n_radial": p.quad.n_radial,
            "per_arc": p.quad.per_arc,
        },
    }
