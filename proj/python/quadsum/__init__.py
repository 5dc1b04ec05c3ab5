"""Quadratic partial sums of double Fourier series: operators, BMO and
Orlicz functionals, and summability experiments."""

from ._core import (  # noqa: F401
    analyze_1d,
    analyze_2d,
    b_functional,
    bmo_norm_step,
    bmo_of_partial_sums,
    bmo_sequence,
    cesaro_mean,
    conjugate_function,
    conjugate_partial_sum,
    convergence_csv,
    correction_terms,
    diagonal_conjugate,
    dirichlet_kernels,
    eval_expression,
    grid_nodes,
    ij_decomposition,
    llogl_norm,
    luxemburg_norm,
    luxemburg_norm_2d,
    modified_quadratic_sum,
    partial_sum_1d,
    partial_sum_grid,
    pv_transform,
    rectangular_sum,
    sample_expression,
    slice_transforms,
    strong_mean_1d,
    summability_mean_2d,
    synthesize_1d,
    synthesize_2d,
    tan_identity_residual,
    u_transform,
    weak_type_csv,
)

__version__ = "0.1.0"
