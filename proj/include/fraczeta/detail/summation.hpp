#pragma once

#include <cmath>
#include <complex>

namespace fraczeta::detail {

// Neumaier's variant of Kahan summation, applied to each component.
class CompensatedSum {
public:
    void add(std::complex<double> x) noexcept {
        add(re_, re_c_, x.real());
        add(im_, im_c_, x.imag());
    }

    std::complex<double> value() const noexcept { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add(double& sum, double& comp, double x) noexcept {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0;
    double im_ = 0.0, im_c_ = 0.0;
};

// exp(z) - 1 without cancellation for small |z|.
inline std::complex<double> expm1(std::complex<double> z) noexcept {
    const double x = z.real();
    const double y = z.imag();
    const double half_sin = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin,
            std::exp(x) * std::sin(y)};
}

// t^w = exp(w ln t) for real t > 0.
inline std::complex<double> real_pow(double t, std::complex<double> w) noexcept {
    return std::exp(w * std::log(t));
}

}  // namespace fraczeta::detail
