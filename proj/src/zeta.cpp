#include "fraczeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fraczeta/detail/summation.hpp"

namespace fraczeta {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr long kMaxTerms = 4096;
constexpr long kCheckOffset = 16;

// Borwein weights w_k = 1 - d_k / d_n, k = 0..n-1, where
//   d_k = n sum_{i=0..k} (n+i-1)! 4^i / ((n-i)! (2i)!).
// d_n grows like (3 + sqrt 8)^n, so the partial sums are rescaled by a power
// of two whenever they get large; the ratios are unaffected.
std::vector<double> borwein_weights(long n) {
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double term = 1.0;
    double partial = 1.0;
    d[0] = partial;
    for (long i = 1; i <= n; ++i) {
        const double di = static_cast<double>(i);
        const double dn = static_cast<double>(n);
        term *= 4.0 * (dn + di - 1.0) * (dn - di + 1.0) / ((2.0 * di) * (2.0 * di - 1.0));
        partial += term;
        if (partial > 0x1p800) {
            term = std::ldexp(term, -800);
            partial = std::ldexp(partial, -800);
            for (long k = 0; k < i; ++k) d[k] = std::ldexp(d[k], -800);
        }
        d[i] = partial;
    }
    std::vector<double> w(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) w[k] = 1.0 - d[k] / d[n];
    return w;
}

Complex eta_borwein(Complex s, long n) {
    const std::vector<double> w = borwein_weights(n);
    detail::CompensatedSum sum;
    for (long k = 0; k < n; ++k) {
        const Complex term = w[k] * detail::real_pow(static_cast<double>(k + 1), -s);
        sum.add(k % 2 == 0 ? term : -term);
    }
    return sum.value();
}

void require_strip(Complex s, const char* what) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError(std::string(what) + ": s must be finite");
    }
    if (!(s.real() > 0.0)) throw DomainError(std::string(what) + ": requires Re(s) > 0");
}

Complex one_minus_two_pow(Complex s) {
    // 1 - 2^(1-s) = -expm1((1-s) ln 2)
    return -detail::expm1((1.0 - s) * std::log(2.0));
}

}  // namespace

Complex eta_series(Complex s, double tol) {
    require_strip(s, "eta_series");
    if (!(tol > 0.0)) throw DomainError("eta_series: tol must be positive");

    // Term budget from the 5.83^-n convergence rate, scaled for the growth of
    // the error constant with |Im s|. Convergence is confirmed by comparing
    // against a run with kCheckOffset more terms.
    long n = 64 + 4 * static_cast<long>(std::ceil(std::fabs(s.imag())));
    double achieved = std::numeric_limits<double>::infinity();
    while (n + kCheckOffset <= kMaxTerms) {
        const Complex coarse = eta_borwein(s, n);
        const Complex fine = eta_borwein(s, n + kCheckOffset);
        achieved = std::abs(fine - coarse);
        if (achieved <= tol) return fine;
        n *= 2;
    }
    throw AccuracyError("eta_series: tolerance " + std::to_string(tol) + " not reached", achieved);
}

Complex zeta_from_eta(Complex s, double tol) {
    require_strip(s, "zeta_from_eta");
    if (s == Complex(1.0, 0.0)) throw SingularParameterError("zeta_from_eta: pole at s=1");
    const Complex denom = one_minus_two_pow(s);
    const double denom_abs = std::abs(denom);
    if (denom_abs < 1e-12) {
        throw SingularParameterError("zeta_from_eta: 1 - 2^(1-s) vanishes");
    }
    return eta_series(s, tol * std::min(1.0, denom_abs)) / denom;
}

double riemann_siegel_theta(double t) {
    const double t2 = t * t;
    return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t2);
}

double hardy_z(double t) {
    const double theta = riemann_siegel_theta(t);
    const Complex z = zeta_from_eta({0.5, t}, 1e-13);
    return (std::polar(1.0, theta) * z).real();
}

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, double grid_step,
                                   double refine_tol) {
    if (!std::isfinite(t_lo) || !std::isfinite(t_hi) || !(t_lo > 0.0) || !(t_lo < t_hi)) {
        throw DomainError("find_zeros: requires 0 < t_lo < t_hi");
    }
    if (!(grid_step > 0.0) || grid_step > 0.5) {
        throw DomainError("find_zeros: grid_step must be in (0, 0.5]");
    }
    if (!(refine_tol > 0.0)) throw DomainError("find_zeros: refine_tol must be positive");

    const long steps = static_cast<long>(std::ceil((t_hi - t_lo) / grid_step));
    std::vector<ZeroRecord> zeros;
    double prev_t = t_lo;
    double prev_z = hardy_z(prev_t);
    for (long i = 1; i <= steps; ++i) {
        const double cur_t = i == steps ? t_hi : t_lo + static_cast<double>(i) * grid_step;
        const double cur_z = hardy_z(cur_t);
        if ((prev_z < 0.0 && cur_z > 0.0) || (prev_z > 0.0 && cur_z < 0.0)) {
            double lo = prev_t, hi = cur_t;
            double z_lo = prev_z;
            while (hi - lo > refine_tol) {
                const double mid = 0.5 * (lo + hi);
                if (!(mid > lo && mid < hi)) {
                    throw RefinementError("find_zeros: bracket cannot be narrowed to " +
                                          std::to_string(refine_tol));
                }
                const double z_mid = hardy_z(mid);
                if (z_mid == 0.0) {
                    lo = std::nextafter(mid, lo);
                    hi = std::nextafter(mid, hi);
                    break;
                }
                if ((z_mid < 0.0) == (z_lo < 0.0)) {
                    lo = mid;
                    z_lo = z_mid;
                } else {
                    hi = mid;
                }
            }
            ZeroRecord rec;
            rec.bracket_lo = lo;
            rec.bracket_hi = hi;
            rec.ordinate = 0.5 * (lo + hi);
            rec.eta_residual = std::abs(eta_series({0.5, rec.ordinate}, 1e-13));
            zeros.push_back(rec);
        }
        prev_t = cur_t;
        prev_z = cur_z;
    }
    return zeros;
}

}  // namespace fraczeta
