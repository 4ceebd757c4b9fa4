#include "fraczeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fraczeta/detail/summation.hpp"

namespace fraczeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kZetaTol = 1e-12;
constexpr double kDiffStep = 1e-5;

// 2^s - 1
Complex two_pow_minus_one(Complex s) { return detail::expm1(s * std::log(2.0)); }

// (2^s - 1) zeta(s); the identity's residual is minus this.
Complex residual_factor(Complex s, double tol) {
    return two_pow_minus_one(s) * zeta_from_eta(s, tol);
}

}  // namespace

Complex identity_lhs(Complex rho) {
    if (!std::isfinite(rho.real()) || !std::isfinite(rho.imag())) {
        throw DomainError("identity_lhs: rho must be finite");
    }
    if (rho == Complex(1.0, 0.0)) throw SingularParameterError("identity_lhs: pole at s=1");
    return std::exp(rho * std::log(2.0)) + 1.0 / (rho - 1.0) + 0.5;
}

BoundedValue identity_rhs(Complex rho, const QuadratureConfig& cfg) {
    const IntegralResult integral = integral_improper(IntegrandKind::FracShifted, rho, cfg);
    return {rho * integral.value, std::abs(rho) * integral.tail_bound};
}

Complex residual_closed_form(Complex s, double tol) { return -residual_factor(s, tol); }

VerificationRecord verify_point(Complex rho, double bracket_width, const QuadratureConfig& cfg,
                                double pass_floor) {
    VerificationRecord rec;
    rec.rho = rho;
    rec.lhs = identity_lhs(rho);
    const BoundedValue rhs = identity_rhs(rho, cfg);
    rec.rhs = rhs.value;
    rec.residual = std::abs(rec.rhs - rec.lhs);

    rec.predicted_residual = std::abs(residual_factor(rho, kZetaTol));

    // Sensitivity of the residual to the ordinate, by central difference along Im(s).
    const Complex ih{0.0, kDiffStep};
    const Complex derivative =
        (residual_factor(rho + ih, kZetaTol) - residual_factor(rho - ih, kZetaTol)) /
        (2.0 * ih);

    rec.error_budget = rhs.error_bound + std::abs(derivative) * bracket_width +
                       kZetaTol * std::abs(two_pow_minus_one(rho)) +
                       8.0 * kEps * (std::abs(rec.lhs) + std::abs(rec.rhs));
    rec.threshold = std::max(pass_floor, 3.0 * rec.error_budget);
    rec.passed = rec.residual <= rec.threshold;
    return rec;
}

VerificationRecord verify_zero(const ZeroRecord& zero, const QuadratureConfig& cfg,
                               double pass_floor) {
    if (!(zero.bracket_lo < zero.ordinate && zero.ordinate < zero.bracket_hi)) {
        throw DomainError("verify_zero: ordinate must lie inside its bracket");
    }
    return verify_point({0.5, zero.ordinate}, zero.bracket_hi - zero.bracket_lo, cfg, pass_floor);
}

std::vector<ScanRow> scan_grid(std::span<const double> sigma_values,
                               std::span<const double> t_values, const QuadratureConfig& cfg,
                               double tol) {
    if (sigma_values.empty() || t_values.empty()) {
        throw DomainError("scan_grid: grids must be nonempty");
    }
    for (double sigma : sigma_values) {
        if (!(sigma > 0.0 && sigma <= 3.0)) throw DomainError("scan_grid: sigma must be in (0, 3]");
    }
    for (double t : t_values) {
        if (!std::isfinite(t)) throw DomainError("scan_grid: t must be finite");
    }

    std::vector<ScanRow> rows;
    rows.reserve(sigma_values.size() * t_values.size());
    for (double sigma : sigma_values) {
        for (double t : t_values) {
            ScanRow row;
            row.s = {sigma, t};
            try {
                row.lhs = identity_lhs(row.s);
                const BoundedValue rhs = identity_rhs(row.s, cfg);
                row.rhs = rhs.value;
                row.residual_measured = row.rhs - row.lhs;
                row.residual_predicted = residual_closed_form(row.s, tol);
                row.budget = rhs.error_bound + tol * std::abs(two_pow_minus_one(row.s)) +
                             8.0 * kEps * (std::abs(row.lhs) + std::abs(row.rhs));
                row.passed =
                    std::abs(row.residual_measured - row.residual_predicted) <= row.budget;
            } catch (const Error& e) {
                row.error = e.what();
                row.passed = false;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace fraczeta
