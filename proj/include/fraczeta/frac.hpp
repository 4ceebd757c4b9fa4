#pragma once

#include "fraczeta/error.hpp"

namespace fraczeta {

/// Value in the half-open unit interval [0, 1).
class FractionalValue {
public:
    constexpr double value() const noexcept { return value_; }
    constexpr operator double() const noexcept { return value_; }

private:
    friend FractionalValue frac_real(double x);
    constexpr explicit FractionalValue(double v) noexcept : value_(v) {}
    double value_;
};

/// x - floor(x). Throws DomainError for non-finite x.
FractionalValue frac_real(double x);

/// Componentwise fractional part {re} + i{im}.
Complex frac_complex(Complex z);

/// {t/2} + 1/2 - {t/2 + 1/2}, which is exactly 1 when floor(t) is odd and 0 otherwise.
double kappa(double t);

/// The same quantity evaluated literally from the three fractional parts.
/// Subject to rounding near the jumps; kept for cross-checking kappa().
double kappa_literal(double t);

}  // namespace fraczeta
