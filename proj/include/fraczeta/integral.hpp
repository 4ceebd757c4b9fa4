#pragma once

#include <string_view>

#include "fraczeta/error.hpp"

namespace fraczeta {

/// Periodic integrand f in  int_1^inf f(t) t^(-s-1) dt.
enum class IntegrandKind {
    Frac,         ///< {t}
    FracShifted,  ///< {t + 1/2}
    Kappa,        ///< kappa(t), the 0/1 indicator of odd floor(t)
};

std::string_view to_string(IntegrandKind kind);
IntegrandKind parse_integrand_kind(std::string_view name);

struct QuadratureConfig {
    long cutoff_n = 10000;    ///< pieces are summed exactly on [1, cutoff_n]
    int ibp_depth = 3;        ///< integration-by-parts corrections applied to the tail
    double target_tol = 1e-8; ///< largest acceptable tail_bound

    /// Throws DomainError unless cutoff_n >= 2, 0 <= ibp_depth <= 4 and target_tol > 0.
    void validate() const;
};

struct IntegralResult {
    Complex value;
    double tail_bound = 0.0;  ///< bound on |true integral - value|
    long pieces = 0;          ///< closed-form pieces summed
};

struct TailEstimate {
    Complex correction;
    double bound = 0.0;
};

/// int_a^b (c0 + c1 t) t^(-s-1) dt in closed form.
///
/// Requires 0 < a < b and s not in {0, 1}.
Complex piece_integral_affine(double c0, double c1, double a, double b, Complex s);

/// Analytic approximation of int_n^inf f(t) t^(-s-1) dt.
///
/// The integrand is split into its mean 1/2, integrated exactly, and a
/// mean-zero periodic part that is integrated by parts `depth` times against
/// its periodic (Bernoulli-type) antiderivatives. `bound` covers the
/// remaining integral and is nonincreasing in n.
TailEstimate tail_estimate(IntegrandKind kind, Complex s, long n, int depth);

/// int_1^inf f(t) t^(-s-1) dt for Re(s) > 0.
///
/// s = 1 is accepted for Kappa only. Throws AccuracyError when the total
/// error bound (tail truncation plus a floating-point allowance for the
/// piece sum) exceeds cfg.target_tol.
IntegralResult integral_improper(IntegrandKind kind, Complex s,
                                 const QuadratureConfig& cfg = {});

}  // namespace fraczeta
