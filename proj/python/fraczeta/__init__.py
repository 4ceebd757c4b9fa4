"""Fractional-part integrals for the Riemann zeta and Dirichlet eta functions."""

from ._core import (
    AccuracyError,
    DomainError,
    Error,
    IntegralResult,
    IntegrandKind,
    QuadratureConfig,
    RefinementError,
    ScanRow,
    SingularParameterError,
    VerificationRecord,
    ZeroRecord,
    eta_series,
    find_zeros,
    frac_complex,
    frac_real,
    hardy_z,
    identity_lhs,
    identity_rhs,
    integral_improper,
    kappa,
    piece_integral_affine,
    residual_closed_form,
    run_cli,
    scan_grid,
    tail_estimate,
    verify_zero,
    zeta_from_eta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
