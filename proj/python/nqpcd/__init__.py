"""Greedy coordinate descent solvers for nonnegative quadratic programming."""

from ._core import (
    gen_hard_nqp,
    gen_lin_nqp,
    gen_random_psd_nqp,
    gen_synthetic_nmf,
    kkt_residual,
    load_matrix,
    load_vector,
    nmf,
    nqp_gradient,
    nqp_objective,
    power_iteration_lmax,
    save_matrix,
    save_vector,
    solve_linnqp,
    solve_nqp,
)

__all__ = [
    "gen_hard_nqp",
    "gen_lin_nqp",
    "gen_random_psd_nqp",
    "gen_synthetic_nmf",
    "kkt_residual",
    "load_matrix",
    "load_vector",
    "nmf",
    "nqp_gradient",
    "nqp_objective",
    "power_iteration_lmax",
    "save_matrix",
    "save_vector",
    "solve_linnqp",
    "solve_nqp",
]
