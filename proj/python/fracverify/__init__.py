"""Verification toolkit for positivity certificates of the first Dirichlet
eigenfunction of the fractional Laplacian on the unit ball.

The compiled core exposes the special functions, kernel means, quadrature
routines, eigenvalue bounds, and the certificate scans; the command line
tool of the same name writes the corresponding reports and figure data.
"""

from ._core import (
    beta,
    big_m,
    big_m_forms,
    direct_qbis_oracle,
    fundamental,
    gamma,
    gamma_ns,
    high_d_min_curve,
    hyp2f1,
    integrate_tail,
    integrate_unit,
    j_tau,
    kappa,
    lambda_upper,
    lambda_upper_forms,
    lambda_upper_one_d_chain,
    lhs_qc,
    lhs_qd,
    log_case_certificate,
    log_case_closed_form_min,
    log_case_constant,
    log_case_expression,
    log_case_stationary_point,
    log_gamma,
    mu,
    mu_forms,
    one_d_expression,
    poisson_extension,
    q_ab,
    qbis_oracle_normalization,
    run_identity_suite,
    sphere_mean,
    torsion_constant,
    verify_high_d,
    verify_one_d,
    x_ab,
    x_star,
)

__version__ = "0.1.0"

__all__ = [
    "beta",
    "big_m",
    "big_m_forms",
    "direct_qbis_oracle",
    "fundamental",
    "gamma",
    "gamma_ns",
    "high_d_min_curve",
    "hyp2f1",
    "integrate_tail",
    "integrate_unit",
    "j_tau",
    "kappa",
    "lambda_upper",
    "lambda_upper_forms",
    "lambda_upper_one_d_chain",
    "lhs_qc",
    "lhs_qd",
    "log_case_certificate",
    "log_case_closed_form_min",
    "log_case_constant",
    "log_case_expression",
    "log_case_stationary_point",
    "log_gamma",
    "mu",
    "mu_forms",
    "one_d_expression",
    "poisson_extension",
    "q_ab",
    "qbis_oracle_normalization",
    "run_identity_suite",
    "sphere_mean",
    "torsion_constant",
    "verify_high_d",
    "verify_one_d",
    "x_ab",
    "x_star",
]
