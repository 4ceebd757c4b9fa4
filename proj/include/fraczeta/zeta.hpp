#pragma once

#include <vector>

#include "fraczeta/error.hpp"

namespace fraczeta {

/// A critical-line zero 1/2 + i*ordinate located by bisection.
struct ZeroRecord {
    double ordinate = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double eta_residual = 0.0;  ///< |eta(1/2 + i*ordinate)|
};

/// Dirichlet eta by the Borwein / Cohen-Villegas-Zagier accelerated
/// alternating sum. Throws AccuracyError if tol cannot be met.
Complex eta_series(Complex s, double tol = 1e-12);

/// zeta(s) = eta(s) / (1 - 2^(1-s)).
Complex zeta_from_eta(Complex s, double tol = 1e-12);

/// Riemann-Siegel theta from its large-t asymptotic expansion.
double riemann_siegel_theta(double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.
double hardy_z(double t);

/// Zeros of Z in (t_lo, t_hi), found from sign changes on a uniform grid and
/// refined by bisection to brackets no wider than refine_tol. Sorted by ordinate.
/// Zeros closer together than grid_step can be missed.
std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, double grid_step = 0.05,
                                   double refine_tol = 1e-9);

}  // namespace fraczeta
