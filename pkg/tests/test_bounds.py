import csv
import math

import numpy as np
import pytest

from bidisk import (
    BoundaryFunction,
    SourceFunction,
    SupNorms,
    Theorem,
    auxiliary_deviation_checks,
    boundary_quotient_scan,
    check_gradient_bound,
    check_green_deviation,
    check_harmonic_schwarz,
    check_main_schwarz,
    check_t2_schwarz,
    check_t2_schwarz_pick,
    derivative_stats,
    problem_norms,
    random_boundary,
    random_problem,
    record_to_dict,
    run_sweep,
    sharpness_demo,
    solve_wirtinger,
    summarize,
    sweep_report,
    sup_norm,
    write_records_csv,
)
from test_solver import constant_problem, identity_problem, source_problem


# ---------------------------------------------------------------------------
# individual checks at golden points
# ---------------------------------------------------------------------------

def test_harmonic_schwarz_at_origin():
    rec = check_harmonic_schwarz(BoundaryFunction.fourier({0: 1.0}), 0j)
    assert rec.lhs == 0.0 and rec.rhs == 0.0 and rec.holds


def test_harmonic_schwarz_constant_data():
    rec = check_harmonic_schwarz(BoundaryFunction.fourier({0: 1.0}), 0.5)
    assert math.isclose(rec.lhs, 0.4, rel_tol=1e-12)
    assert math.isclose(rec.rhs, 4.0 / math.pi * math.atan(0.5), rel_tol=1e-15)
    assert rec.holds


def test_t2_schwarz_at_origin():
    rec = check_t2_schwarz(BoundaryFunction.two_arc(1.0, -1.0), 0j)
    assert rec.lhs < 1e-12 and rec.rhs == 0.0 and rec.holds


def test_t2_schwarz_constant_data():
    rec = check_t2_schwarz(BoundaryFunction.fourier({0: 1.0}), 0.5)
    assert math.isclose(rec.lhs, 0.49, rel_tol=1e-12)
    expected_rhs = 2.0 / math.pi * (1.25 * math.atan(0.5) + 0.5 * 0.75 / 1.25)
    assert math.isclose(rec.rhs, expected_rhs, rel_tol=1e-15)
    assert rec.holds


def test_t2_schwarz_pick_radial_data_at_origin():
    rec = check_t2_schwarz_pick(BoundaryFunction.fourier({0: 1.0}), 0j)
    assert rec.lhs < 1e-12
    assert math.isclose(rec.rhs, 4.0 / math.pi, rel_tol=1e-15)


def test_t2_schwarz_pick_sharp_at_origin():
    rec = check_t2_schwarz_pick(BoundaryFunction.two_arc(1.0, -1.0), 0j)
    assert abs(rec.lhs - 4.0 / math.pi) < 1e-8
    assert rec.holds  # margin is zero up to quadrature error


def test_main_schwarz_identity_example():
    p = identity_problem()
    rec = check_main_schwarz(p, SupNorms(1.0, 0.0, 0.0), 0.5)
    assert math.isclose(rec.lhs, 0.5, rel_tol=1e-10)
    expected_rhs = 2.0 / math.pi * (1.25 * math.atan(0.5) + 0.5 * 0.75 / 1.25)
    assert math.isclose(rec.rhs, expected_rhs, rel_tol=1e-15)
    assert rec.holds


def test_main_schwarz_sharp_for_unit_source():
    p = source_problem(SourceFunction.constant(1.0))
    rec = check_main_schwarz(p, SupNorms(0.0, 0.0, 1.0), 0j)
    assert math.isclose(rec.lhs, 1.0 / 64.0, rel_tol=1e-10)
    assert math.isclose(rec.rhs, 1.0 / 64.0, rel_tol=1e-15)
    assert abs(rec.margin) < 1e-10
    assert rec.holds


def test_gradient_bound_identity_at_origin():
    p = identity_problem()
    rec = check_gradient_bound(p, SupNorms(1.0, 0.0, 0.0), 0j)
    assert math.isclose(rec.lhs, 1.0, rel_tol=1e-9)
    assert math.isclose(rec.rhs, 4.0 / math.pi, rel_tol=1e-15)
    assert rec.holds


def test_gradient_bound_constant_problem():
    p = constant_problem()
    rec = check_gradient_bound(p, problem_norms(p), 0.4 - 0.2j)
    assert rec.lhs < 1e-10
    assert rec.holds


def test_green_deviation_at_origin():
    rec = check_green_deviation(SourceFunction.constant(1.0), 0j)
    assert rec.lhs == 0.0 and rec.rhs == 0.0 and rec.holds


def test_green_deviation_unit_source():
    rec = check_green_deviation(SourceFunction.constant(1.0), 0.5)
    assert rec.holds and rec.margin > 0


def test_green_deviation_radial_source_grid():
    g = SourceFunction.radial([0.0, 1.0])
    g_sup = sup_norm(g)
    rng = np.random.default_rng(4)
    for _ in range(20):
        z = 0.9 * math.sqrt(rng.random()) * np.exp(2j * math.pi * rng.random())
        rec = check_green_deviation(g, complex(z), g_sup=g_sup)
        assert rec.holds


def test_auxiliary_deviation_checks_hold():
    p = identity_problem()
    norms = problem_norms(p)
    for z in (0.2, 0.5 + 0.3j, 0.75):
        for rec in auxiliary_deviation_checks(p, norms, z):
            assert rec.holds


# ---------------------------------------------------------------------------
# boundary quotient scan
# ---------------------------------------------------------------------------

def test_quotient_scan_identity_problem():
    p = identity_problem()
    for eta in (1.0, 1j):
        scan = boundary_quotient_scan(p, eta)
        for _, q in scan.quotients:
            assert abs(q - 1.0) < 1e-7
        assert scan.passes
        assert math.isclose(scan.lower_bound, 1.0, rel_tol=1e-12)


def test_quotient_scan_constant_problem():
    p = constant_problem()
    scan = boundary_quotient_scan(p, 1.0)
    for _, q in scan.quotients:
        assert q < 1e-9
    assert scan.passes  # trivial bound: 1 - ||f+h|| = 0 up to estimation safety


def test_quotient_scan_validates_eta():
    with pytest.raises(ValueError):
        boundary_quotient_scan(identity_problem(), 0.5)


# ---------------------------------------------------------------------------
# sharpness demo
# ---------------------------------------------------------------------------

def test_sharpness_demo():
    rep = sharpness_demo()
    assert rep.passed
    assert abs(rep.u_z0 - (-2j / math.pi)) < 1e-8
    assert abs(rep.gradient_norm - 4.0 / math.pi) < 1e-8


def test_sharpness_field_vanishes_at_origin():
    # the two-arc data is odd under reflection, so the field is zero at 0
    from bidisk import KernelKind, boundary_transform

    val = boundary_transform(KernelKind.K2, BoundaryFunction.two_arc(1.0, -1.0), 0j)
    assert abs(val) < 1e-14


# ---------------------------------------------------------------------------
# random data generation
# ---------------------------------------------------------------------------

def test_random_problem_deterministic():
    a = random_problem(42, 6, SupNorms(1.0, 1.0, 1.0))
    b = random_problem(42, 6, SupNorms(1.0, 1.0, 1.0))
    assert a == b


def test_random_problem_hits_targets():
    p = random_problem(7, 6, SupNorms(1.0, 1.0, 1.0))
    n = problem_norms(p)
    for v in (n.f_sup, n.fh_sup, n.g_sup):
        assert 0.999 <= v <= 1.0021


def test_random_problem_degree_zero_is_constant():
    p = random_problem(3, 0, SupNorms(1.0, 1.0, 0.0))
    assert set(p.f.modes()) <= {0}
    assert set(p.h.modes()) <= {0}


def test_random_problem_zero_targets():
    p = random_problem(3, 4, SupNorms(1.0, 0.0, 0.0))
    assert p.g.is_zero()
    n = problem_norms(p)
    assert n.fh_sup == 0.0


def test_random_boundary_sup_below_one():
    theta = 2.0 * math.pi * np.arange(8192) / 8192
    for seed in range(5):
        b = random_boundary(seed, 8, 1.0)
        assert float(np.max(np.abs(b.evaluate(theta)))) <= 1.0


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("theorem", list(Theorem))
def test_mini_sweep_zero_violations(theorem):
    records = run_sweep(theorem, n_problems=30, points_per_problem=8, seed=11)
    s = summarize(theorem.value, records)
    assert s.samples == 240
    assert s.violations == 0
    assert s.min_margin >= -1e-9


def test_jacobian_identity_and_lambda_bound():
    # lambda ||D|| = |J| at the origin, and the normalized lower bound on lambda
    for seed in range(10):
        p = random_problem(900 + seed, 5, SupNorms(1.0, 1.0, 1.0))
        n = problem_norms(p)
        w = solve_wirtinger(p, 0j)
        s = derivative_stats(w)
        assert math.isclose(abs(s.jacobian), s.norm * s.lam, rel_tol=1e-12, abs_tol=1e-15)
        amp = 4.0 / math.pi * n.f_sup + 2.0 / math.pi * n.fh_sup + 23.0 / 48.0 * n.g_sup
        # scale-invariant form of the normalized bound lambda >= 1/amp
        assert s.lam * amp >= abs(s.jacobian) - 1e-9


# ---------------------------------------------------------------------------
# report emission
# ---------------------------------------------------------------------------

def test_report_shapes(tmp_path):
    records = run_sweep(Theorem.T2_SCHWARZ, n_problems=5, points_per_problem=4, seed=1)
    rep = sweep_report("t2", records)
    assert rep["theorem"] == "t2"
    assert rep["samples"] == 20
    assert rep["violations"] == 0
    assert isinstance(rep["min_margin"], float)
    assert len(rep["records"]) == 20
    d = record_to_dict(records[0])
    assert set(d) == {"theorem", "z", "lhs", "rhs", "margin", "holds"}

    path = tmp_path / "records.csv"
    write_records_csv(path, records)
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 20
    assert set(rows[0]) == {"theorem", "z_re", "z_im", "lhs", "rhs", "margin", "holds"}
    assert rows[0]["theorem"] == "t2"
    float(rows[0]["margin"])  # parses back
