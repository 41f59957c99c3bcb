"""Command-line interface: solve, verify, landau, sharpness, kernel-table.

Exit codes: 0 on success, 1 when a verification sweep finds violations,
2 on bad configuration or input.  All floating output is printed with 17
significant digits, so identical commands produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .bounds import (
    Theorem,
    run_sweep,
    sharpness_demo,
    sweep_report,
    write_records_csv,
)
from .kernels import KernelKind, green, i_alpha, j_integral, kernel_eval
from .landau import landau_ibdp, landau_t2
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .solver import problem_from_json, solve_at, solve_wirtinger

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _add_quad_options(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--n-theta", type=int, default=DEFAULT_CONFIG.n_theta)
    sp.add_argument("--n-radial", type=int, default=DEFAULT_CONFIG.n_radial)
    sp.add_argument("--no-per-arc", action="store_true")


def _quad_config(args) -> QuadratureConfig:
    return QuadratureConfig(
        n_theta=args.n_theta, n_radial=args.n_radial, per_arc=not args.no_per_arc
    )


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bidisk", description=__doc__)
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("solve", help="evaluate the solution on a grid, write CSV")
    sp.add_argument("--problem", required=True, help="path to problem JSON")
    sp.add_argument("--grid", choices=["polar", "cart"], default="polar")
    sp.add_argument("--r-steps", type=int, default=10)
    sp.add_argument("--theta-steps", type=int, default=24)
    sp.add_argument("--nx", type=int, default=21)
    sp.add_argument("--ny", type=int, default=21)
    sp.add_argument("--r-max", type=float, default=0.9)
    sp.add_argument("--derivatives", action="store_true")
    sp.add_argument("--out", default="-")
    _add_quad_options(sp)

    sp = sub.add_parser("verify", help="randomized inequality sweep")
    sp.add_argument(
        "--theorem",
        choices=[t.value for t in Theorem] + ["all"],
        default="all",
    )
    sp.add_argument("--samples", type=int, default=500, help="number of random problems")
    sp.add_argument("--points", type=int, default=20, help="points per problem")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--degree", type=int, default=6)
    sp.add_argument("--out", default="-", help="report JSON path")
    sp.add_argument("--csv", default=None, help="optional records CSV path")
    _add_quad_options(sp)

    sp = sub.add_parser("landau", help="solve for the univalence radius")
    sp.add_argument("--variant", choices=["t2", "ibdp"], required=True)
    sp.add_argument("--m", type=float, default=1.0)
    sp.add_argument("--m1", type=float, default=1.0)
    sp.add_argument("--m2", type=float, default=1.0)
    sp.add_argument("--m3", type=float, default=1.0)

    sp = sub.add_parser("sharpness", help="extremal two-arc gradient demo")
    _add_quad_options(sp)

    sp = sub.add_parser("kernel-table", help="tabulate a kernel over a grid, write CSV")
    sp.add_argument("--kernel", choices=["P", "H0", "K2", "F0", "G", "I2", "J"], required=True)
    sp.add_argument("--r-steps", type=int, default=9)
    sp.add_argument("--theta-steps", type=int, default=12)
    sp.add_argument("--r-max", type=float, default=0.9)
    sp.add_argument("--w-re", type=float, default=0.3, help="second argument of G")
    sp.add_argument("--w-im", type=float, default=0.0)
    sp.add_argument("--out", default="-")
    _add_quad_options(sp)
    return ap


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _cmd_solve(args) -> int:
    with open(args.problem, encoding="utf-8") as fh:
        problem = problem_from_json(json.load(fh))
    problem = type(problem)(problem.f, problem.h, problem.g, quad=_quad_config(args))
    if args.grid == "polar":
        radii = [(i + 1) / args.r_steps * args.r_max for i in range(args.r_steps)]
        angles = [2.0 * math.pi * j / args.theta_steps for j in range(args.theta_steps)]
        points = [0j] + [r * complex(math.cos(t), math.sin(t)) for r in radii for t in angles]
    else:
        xs = np.linspace(-args.r_max, args.r_max, args.nx)
        ys = np.linspace(-args.r_max, args.r_max, args.ny)
        points = [complex(x, y) for x in xs for y in ys if abs(complex(x, y)) <= args.r_max]
    out, close = _open_out(args.out)
    try:
        header = "z_re,z_im,phi_re,phi_im"
        if args.derivatives:
            header += ",dz_re,dz_im,dzbar_re,dzbar_im"
        out.write(header + "\n")
        for z in points:
            phi = solve_at(problem, z)
            row = [z.real, z.imag, phi.real, phi.imag]
            if args.derivatives:
                w = solve_wirtinger(problem, z)
                row += [w.dz.real, w.dz.imag, w.dzbar.real, w.dzbar.imag]
            out.write(",".join(_fmt(v) for v in row) + "\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_verify(args) -> int:
    cfg = _quad_config(args)
    names = [t.value for t in Theorem] if args.theorem == "all" else [args.theorem]
    reports = []
    all_records = []
    violations = 0
    for name in names:
        records = run_sweep(
            Theorem(name),
            n_problems=args.samples,
            points_per_problem=args.points,
            seed=args.seed,
            cfg=cfg,
            degree=args.degree,
        )
        rep = sweep_report(name, records)
        violations += rep["violations"]
        reports.append(rep)
        all_records.extend(records)
    payload = {"reports": reports} if len(reports) > 1 else reports[0]
    out, close = _open_out(args.out)
    try:
        json.dump(payload, out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
    if args.csv:
        write_records_csv(args.csv, all_records)
    return 1 if violations else 0


def _cmd_landau(args) -> int:
    if args.variant == "t2":
        res = landau_t2(args.m)
    else:
        res = landau_ibdp(args.m1, args.m2, args.m3)
    print(
        json.dumps(
            {
                "r0": float(_fmt(res.r0)),
                "residual": float(_fmt(res.residual)),
                "R0_lower": float(_fmt(res.R0_lower)),
            }
        )
    )
    return 0


def _cmd_sharpness(args) -> int:
    rep = sharpness_demo(_quad_config(args))
    print(f"U_z(0)        = {_fmt(rep.u_z0.real)} + {_fmt(rep.u_z0.imag)}i")
    print(f"expected      = 0 + {_fmt(-2.0 / math.pi)}i")
    print(f"|D_U(0)|      = {_fmt(rep.gradient_norm)}")
    print(f"expected 4/pi = {_fmt(4.0 / math.pi)}")
    print("PASS" if rep.passed else "FAIL")
    return 0 if rep.passed else 1


def _cmd_kernel_table(args) -> int:
    out, close = _open_out(args.out)
    try:
        k = args.kernel
        if k in ("P", "H0", "K2", "F0"):
            kind = KernelKind(k)
            out.write("z_re,z_im,value\n")
            for i in range(args.r_steps):
                r = (i + 1) / args.r_steps * args.r_max
                for j in range(args.theta_steps):
                    t = 2.0 * math.pi * j / args.theta_steps
                    z = r * complex(math.cos(t), math.sin(t))
                    out.write(f"{_fmt(z.real)},{_fmt(z.imag)},{_fmt(kernel_eval(kind, z))}\n")
        elif k == "G":
            w = complex(args.w_re, args.w_im)
            out.write("z_re,z_im,w_re,w_im,value\n")
            for i in range(args.r_steps):
                r = (i + 1) / args.r_steps * args.r_max
                for j in range(args.theta_steps):
                    t = 2.0 * math.pi * j / args.theta_steps
                    z = r * complex(math.cos(t), math.sin(t))
                    out.write(
                        f"{_fmt(z.real)},{_fmt(z.imag)},{_fmt(w.real)},{_fmt(w.imag)},"
                        f"{_fmt(green(z, w))}\n"
                    )
        elif k == "I2":
            out.write("r,value\n")
            for i in range(args.r_steps):
                r = i / args.r_steps * args.r_max
                out.write(f"{_fmt(r)},{_fmt(i_alpha(2.0, r))}\n")
        else:  # J
            out.write("r,theta,value\n")
            for i in range(args.r_steps):
                r = i / args.r_steps * args.r_max
                for j in range(args.theta_steps + 1):
                    t = math.pi * j / args.theta_steps
                    out.write(f"{_fmt(r)},{_fmt(t)},{_fmt(j_integral(t, r))}\n")
    finally:
        if close:
            out.close()
    return 0


def main(argv=None) -> int:
    threads = os.environ.get("BIDISK_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"bidisk: invalid BIDISK_THREADS value {threads!r}", file=sys.stderr)
            return 2
        # evaluation is serial and deterministic; any positive cap is honored
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.verb == "solve":
            return _cmd_solve(args)
        if args.verb == "verify":
            return _cmd_verify(args)
        if args.verb == "landau":
            return _cmd_landau(args)
        if args.verb == "sharpness":
            return _cmd_sharpness(args)
        return _cmd_kernel_table(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"bidisk: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
