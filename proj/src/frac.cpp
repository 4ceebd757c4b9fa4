#include "fraczeta/frac.hpp"

#include <cmath>
#include <string>

namespace fraczeta {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

// x - floor(x), clamped below 1. For tiny negative x the exact value 1 - |x|
// rounds to 1.0.
double frac_unchecked(double x) {
    const double r = x - std::floor(x);
    return r < 1.0 ? r : std::nextafter(1.0, 0.0);
}

}  // namespace

FractionalValue frac_real(double x) {
    require_finite(x, "frac_real");
    return FractionalValue(frac_unchecked(x));
}

Complex frac_complex(Complex z) {
    require_finite(z.real(), "frac_complex");
    require_finite(z.imag(), "frac_complex");
    return {frac_unchecked(z.real()), frac_unchecked(z.imag())};
}

double kappa(double t) {
    require_finite(t, "kappa");
    // Period 2: floor(t) mod 2, valid for negative t as well.
    const double parity = std::fmod(std::floor(t), 2.0);
    return (parity == 1.0 || parity == -1.0) ? 1.0 : 0.0;
}

double kappa_literal(double t) {
    require_finite(t, "kappa_literal");
    return frac_unchecked(0.5 * t) + 0.5 - frac_unchecked(0.5 * t + 0.5);
}

}  // namespace fraczeta
