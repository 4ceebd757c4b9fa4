#include "fraczeta/integral.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fraczeta/detail/summation.hpp"
#include "fraczeta/frac.hpp"

namespace fraczeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTwoPi = 6.283185307179586476925286766559;

// zeta(m), m = 0..5 (entries 0 and 1 unused).
constexpr std::array<double, 6> kZeta = {0.0, 0.0, 1.6449340668482264365, 1.2020569031595942854,
                                         1.0823232337111381915, 1.0369277551433699263};

constexpr std::array<double, 6> kFactorial = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0};

// Bernoulli polynomials B_1..B_5 on [0, 1).
double bernoulli(int m, double x) {
    switch (m) {
        case 1: return x - 0.5;
        case 2: return (x - 1.0) * x + 1.0 / 6.0;
        case 3: return ((x - 1.5) * x + 0.5) * x;
        case 4: return (((x - 2.0) * x + 1.0) * x) * x - 1.0 / 30.0;
        case 5: return ((((x - 2.5) * x + 5.0 / 3.0) * x) * x - 1.0 / 6.0) * x;
        default: throw DomainError("bernoulli: order out of range");
    }
}

// Write f = 1/2 + g with g mean-zero and periodic:
//   Frac:        g(t) = B_1({t})
//   FracShifted: g(t) = B_1({t + 1/2})
//   Kappa:       g(t) = B_1({t/2}) - B_1({t/2 + 1/2})   (a +-1/2 square wave, period 2)
// G_j, the j-th mean-zero periodic antiderivative of g, is
//   Frac:        B_{j+1}({t}) / (j+1)!
//   FracShifted: B_{j+1}({t + 1/2}) / (j+1)!
//   Kappa:       2^j [B_{j+1}({t/2}) - B_{j+1}({t/2 + 1/2})] / (j+1)!
double periodic_antiderivative(IntegrandKind kind, int j, double t) {
    const int m = j + 1;
    switch (kind) {
        case IntegrandKind::Frac:
            return bernoulli(m, frac_real(t)) / kFactorial[m];
        case IntegrandKind::FracShifted:
            return bernoulli(m, frac_real(t + 0.5)) / kFactorial[m];
        case IntegrandKind::Kappa:
            return std::ldexp(bernoulli(m, frac_real(0.5 * t)) -
                                  bernoulli(m, frac_real(0.5 * t + 0.5)),
                              j) /
                   kFactorial[m];
    }
    return 0.0;
}

// sup |G_j|. j = 0 is sup |g| = 1/2 for all three kinds. For j >= 1 the
// Fourier series B_m({x})/m! = -2 sum_k cos(2 pi k x - m pi/2) / (2 pi k)^m
// gives sup |B_m({x})|/m! <= 2 zeta(m) / (2 pi)^m (attained for even m, so
// 1/12 for the sawtooth antiderivative). The half-period difference used by
// Kappa keeps only odd k, doubled: 4 (1 - 2^-m) zeta(m) / (2 pi)^m, which is
// 1/4 for the triangle wave at j = 1.
double antiderivative_sup(IntegrandKind kind, int j) {
    if (j == 0) return 0.5;
    const int m = j + 1;
    const double base = kZeta[m] / std::pow(kTwoPi, m);
    if (kind == IntegrandKind::Kappa) {
        return std::ldexp(4.0 * (1.0 - std::ldexp(1.0, -m)) * base, j);
    }
    return 2.0 * base;
}

void require_strip(Complex s, IntegrandKind kind, const char* what) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError(std::string(what) + ": s must be finite");
    }
    if (!(s.real() > 0.0)) {
        throw DomainError(std::string(what) + ": requires Re(s) > 0");
    }
    if (s == Complex(1.0, 0.0) && kind != IntegrandKind::Kappa) {
        throw SingularParameterError(std::string(what) + ": pole at s=1");
    }
}

// (exp(z) - 1) / z, continuous at 0.
Complex phi(Complex z) {
    if (z == Complex(0.0, 0.0)) return {1.0, 0.0};
    return detail::expm1(z) / z;
}

struct Piece {
    Complex value;
    double rounding = 0.0;  // a-priori bound on the floating-point error of value
};

// int_a^b (c0 + c1 t) t^(-s-1) dt written as c0 P0 + c1 P1 with
//   P0 = int t^(-s-1) = a^-s      L phi(-s L)
//   P1 = int t^(-s)   = a^(1-s)   L phi((1-s) L),   L = ln(b/a).
// Both are regular at s = 0 and s = 1 and avoid the a^w - b^w cancellation.
Piece affine_piece(double c0, double c1, double a, double b, Complex s) {
    const double log_ratio = std::log1p((b - a) / a);
    const Complex a_pow = detail::real_pow(a, -s);
    Complex value{0.0, 0.0};
    double magnitude = 0.0;
    if (c0 != 0.0) {
        const Complex term = c0 * (a_pow * (log_ratio * phi(-s * log_ratio)));
        value += term;
        magnitude += std::abs(term);
    }
    if (c1 != 0.0) {
        const Complex term =
            c1 * (a * a_pow * (log_ratio * phi((1.0 - s) * log_ratio)));
        value += term;
        magnitude += std::abs(term);
    }
    // exp(-s ln a) carries a relative error of order eps * |s| ln a.
    const double rel = kEps * (32.0 + 4.0 * std::abs(s + 1.0) * std::log(b));
    return {value, rel * magnitude};
}

}  // namespace

std::string_view to_string(IntegrandKind kind) {
    switch (kind) {
        case IntegrandKind::Frac: return "frac";
        case IntegrandKind::FracShifted: return "shifted";
        case IntegrandKind::Kappa: return "kappa";
    }
    return "?";
}

IntegrandKind parse_integrand_kind(std::string_view name) {
    if (name == "frac") return IntegrandKind::Frac;
    if (name == "shifted") return IntegrandKind::FracShifted;
    if (name == "kappa") return IntegrandKind::Kappa;
    throw DomainError("unknown integrand kind '" + std::string(name) + "'");
}

void QuadratureConfig::validate() const {
    if (cutoff_n < 2) throw DomainError("QuadratureConfig: cutoff_n must be >= 2");
    if (ibp_depth < 0 || ibp_depth > 4) {
        throw DomainError("QuadratureConfig: ibp_depth must be in [0, 4]");
    }
    if (!(target_tol > 0.0) || !std::isfinite(target_tol)) {
        throw DomainError("QuadratureConfig: target_tol must be positive and finite");
    }
}

Complex piece_integral_affine(double c0, double c1, double a, double b, Complex s) {
    if (!std::isfinite(c0) || !std::isfinite(c1) || !std::isfinite(a) || !std::isfinite(b) ||
        !std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("piece_integral_affine: arguments must be finite");
    }
    if (!(a > 0.0) || !(b > a)) {
        throw DomainError("piece_integral_affine: requires 0 < a < b");
    }
    if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) {
        throw SingularParameterError("piece_integral_affine: s must not be 0 or 1");
    }
    return affine_piece(c0, c1, a, b, s).value;
}

TailEstimate tail_estimate(IntegrandKind kind, Complex s, long n, int depth) {
    require_strip(s, kind, "tail_estimate");
    if (n < 2) throw DomainError("tail_estimate: n must be >= 2");
    if (depth < 0 || depth > 4) throw DomainError("tail_estimate: depth must be in [0, 4]");

    const double big_n = static_cast<double>(n);
    const double sigma = s.real();

    // Mean 1/2: (1/2) int_n^inf t^(-s-1) dt.
    Complex correction = 0.5 * detail::real_pow(big_n, -s) / s;

    // With w(t) = t^(-s-1), repeated integration by parts gives
    //   int_n^inf g w = sum_{j=1..depth} (-1)^j G_j(n) w^(j-1)(n)
    //                   + (-1)^depth int_n^inf G_depth w^(depth),
    // where w^(j)(t) = poch_j t^(-s-1-j), poch_j = prod_{i=1..j} (-s-i).
    Complex poch{1.0, 0.0};
    for (int j = 1; j <= depth; ++j) {
        const Complex w_prev = poch * detail::real_pow(big_n, -s - static_cast<double>(j));
        const double g = periodic_antiderivative(kind, j, big_n);
        correction += (j % 2 == 0 ? g : -g) * w_prev;
        poch *= -s - static_cast<double>(j);
    }

    const double bound = antiderivative_sup(kind, depth) * std::abs(poch) *
                         std::pow(big_n, -sigma - depth) / (sigma + depth);
    return {correction, bound};
}

IntegralResult integral_improper(IntegrandKind kind, Complex s, const QuadratureConfig& cfg) {
    cfg.validate();
    require_strip(s, kind, "integral_improper");

    const long n = cfg.cutoff_n;
    detail::CompensatedSum sum;
    double rounding = 0.0;
    double magnitude = 0.0;
    long pieces = 0;
    auto accumulate = [&](double c0, double c1, double a, double b) {
        const Piece p = affine_piece(c0, c1, a, b, s);
        sum.add(p.value);
        rounding += p.rounding;
        magnitude += std::abs(p.value);
        ++pieces;
    };

    switch (kind) {
        case IntegrandKind::Frac:
            // {t} = t - k on [k, k+1)
            for (long k = 1; k < n; ++k) {
                const double kd = static_cast<double>(k);
                accumulate(-kd, 1.0, kd, kd + 1.0);
            }
            break;
        case IntegrandKind::FracShifted: {
            // {t + 1/2} = t + 1/2 - k on [k - 1/2, k + 1/2), first piece clipped to [1, 3/2)
            // and last to [n - 1/2, n].
            for (long k = 1; k <= n; ++k) {
                const double kd = static_cast<double>(k);
                const double a = k == 1 ? 1.0 : kd - 0.5;
                const double b = k == n ? kd : kd + 0.5;
                accumulate(0.5 - kd, 1.0, a, b);
            }
            break;
        }
        case IntegrandKind::Kappa:
            // kappa = 1 on [k, k+1) for odd k, else 0.
            for (long k = 1; k < n; k += 2) {
                const double kd = static_cast<double>(k);
                accumulate(1.0, 0.0, kd, kd + 1.0);
            }
            break;
    }

    const TailEstimate tail = tail_estimate(kind, s, n, cfg.ibp_depth);
    const Complex head = sum.value();
    IntegralResult result;
    result.value = head + tail.correction;
    result.pieces = pieces;
    result.tail_bound = tail.bound + rounding + 4.0 * kEps * (magnitude + std::abs(tail.correction)) +
                        32.0 * kEps * std::abs(tail.correction);

    if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag()) ||
        !std::isfinite(result.tail_bound)) {
        throw AccuracyError("integral_improper: non-finite result",
                            std::numeric_limits<double>::infinity());
    }
    if (result.tail_bound > cfg.target_tol) {
        throw AccuracyError("integral_improper: error bound " + std::to_string(result.tail_bound) +
                                " exceeds target " + std::to_string(cfg.target_tol),
                            result.tail_bound);
    }
    return result;
}

}  // namespace fraczeta
