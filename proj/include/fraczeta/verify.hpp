#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fraczeta/error.hpp"
#include "fraczeta/integral.hpp"
#include "fraczeta/zeta.hpp"

namespace fraczeta {

// Zero identity checked here:
//
//   2^rho + 1/(rho - 1) + 1/2  =  rho * int_1^inf {t + 1/2} t^(-rho-1) dt
//
// For general s with Re(s) > 0, s != 1 the two sides differ by
//
//   rhs(s) - lhs(s) = -(2^s - 1) zeta(s),
//
// which vanishes in the critical strip exactly at zeros of zeta.

struct BoundedValue {
    Complex value;
    double error_bound = 0.0;
};

struct VerificationRecord {
    Complex rho;
    Complex lhs;
    Complex rhs;
    double residual = 0.0;            ///< |rhs - lhs|
    double predicted_residual = 0.0;  ///< |(2^rho - 1) zeta(rho)|
    double error_budget = 0.0;
    double threshold = 0.0;           ///< residual must not exceed this to pass
    bool passed = false;
};

struct ScanRow {
    Complex s;
    Complex lhs;
    Complex rhs;
    Complex residual_measured;   ///< rhs - lhs
    Complex residual_predicted;  ///< -(2^s - 1) zeta(s)
    double budget = 0.0;
    bool passed = false;                ///< |measured - predicted| <= budget
    std::optional<std::string> error;   ///< set when the point could not be evaluated
};

/// Smallest residual threshold used by verify_zero.
inline constexpr double kDefaultPassFloor = 1e-5;

/// 2^rho + 1/(rho - 1) + 1/2.
Complex identity_lhs(Complex rho);

/// rho * int_1^inf {t + 1/2} t^(-rho-1) dt, with error bound |rho| * tail_bound.
BoundedValue identity_rhs(Complex rho, const QuadratureConfig& cfg = {});

/// -(2^s - 1) zeta(s), the value rhs - lhs must take.
Complex residual_closed_form(Complex s, double tol = 1e-12);

/// Checks the identity at rho. bracket_width is the uncertainty of rho along
/// the imaginary axis; it is folded into the error budget through a central
/// difference of (2^s - 1) zeta(s). Passes when residual <= max(pass_floor, 3*budget).
VerificationRecord verify_point(Complex rho, double bracket_width,
                                const QuadratureConfig& cfg = {},
                                double pass_floor = kDefaultPassFloor);

/// verify_point at rho = 1/2 + i*ordinate with the zero's bracket width.
VerificationRecord verify_zero(const ZeroRecord& zero, const QuadratureConfig& cfg = {},
                               double pass_floor = kDefaultPassFloor);

/// Measured against predicted residual on sigma x t, sigma outer. Points that
/// fail to evaluate are kept with `error` set.
std::vector<ScanRow> scan_grid(std::span<const double> sigma_values,
                               std::span<const double> t_values,
                               const QuadratureConfig& cfg = {}, double tol = 1e-12);

}  // namespace fraczeta
