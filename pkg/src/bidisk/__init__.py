"""Kernel solver and bound verifier for the disk biharmonic Dirichlet problem."""

from .bounds import (
    AuxRecord,
    BoundCheckRecord,
    MARGIN_SLACK,
    QuotientScan,
    SharpnessReport,
    SweepSummary,
    Theorem,
    auxiliary_deviation_checks,
    boundary_quotient_scan,
    check_gradient_bound,
    check_green_deviation,
    check_harmonic_schwarz,
    check_main_schwarz,
    check_t2_schwarz,
    check_t2_schwarz_pick,
    random_boundary,
    random_problem,
    record_to_dict,
    run_sweep,
    sharpness_demo,
    summarize,
    sweep_report,
    write_records_csv,
)
from .functions import BoundaryFunction, SourceFunction, SupNorms, boundary_sum_sup, sup_norm
from .geometry import DerivativeSummary, DiskPoint, WirtingerPair, derivative_stats
from .kernels import (
    KernelKind,
    green,
    green_gradient,
    i_alpha,
    j_integral,
    k2_kernel_gradient,
    kernel_eval,
    poisson_kernel_gradient,
)
from .landau import LandauResult, landau_ibdp, landau_t2, sigma_eval
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, circle_mean, disk_mean
from .solver import (
    BiharmonicProblem,
    boundary_transform,
    boundary_transform_gradient,
    green_potential,
    green_potential_exact,
    green_potential_gradient,
    green_potential_gradient_quadrature,
    pde_residual,
    problem_from_json,
    problem_norms,
    problem_to_json,
    solve_at,
    solve_wirtinger,
)
from .talpha import (
    CoefficientBoundReport,
    CoefficientBoundRow,
    CoefficientSequence,
    coefficient_bound_check,
    gauss_hypergeometric,
    t2_coefficient_extract,
    t2_derivatives,
    t2_field_sup,
    t2_gradient_deviation_bound,
    t_alpha_eval,
)

__version__ = "0.1.0"
