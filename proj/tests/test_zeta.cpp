#include <doctest.h>

#include <cmath>

#include "fraczeta/zeta.hpp"
#include "oracle.hpp"

using namespace fraczeta;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Ordinates of the first ten zeros, mpmath zetazero.
constexpr double kZeroOrdinates[] = {
    14.134725141734693790, 21.022039638771554993, 25.010857580145688763, 30.424876125859513210,
    32.935061587739189691, 37.586178158825671257, 40.918719012147495187, 43.327073280914999519,
    48.005150881167159728, 49.773832477672302182};

}  // namespace

TEST_CASE("eta_series at real points") {
    CHECK(std::abs(eta_series({1.0, 0.0}) - std::log(2.0)) <= 1e-14);
    CHECK(std::abs(eta_series({2.0, 0.0}) - kPi * kPi / 12.0) <= 1e-14);
    // Independent route: Euler-averaged partial sums.
    CHECK(std::abs(eta_series({1.0, 0.0}).real() - oracle::eta_partial_average(1.0, 200000)) <= 1e-9);
    CHECK(std::abs(eta_series({0.5, 0.0}).real() - oracle::eta_partial_average(0.5, 200000)) <= 1e-7);
}

TEST_CASE("eta_series and zeta_from_eta against mpmath") {
    struct Point {
        Complex s, eta, zeta;
    };
    const Point points[] = {
        {{0.25, 5.0}, {1.8744232714600911, 0.31645938437576809}, {0.66883863246809319, 0.26008665492521415}},
        {{0.75, 25.0}, {0.35365446827167824, -0.26045391520568256}, {0.2796807333499227, 0.076255084178588759}},
        {{1.5, 40.0}, {1.5010423995912721, -0.089935578060072068}, {0.87690853646991387, -0.25771227344398762}},
        {{2.0, 14.1}, {1.0193408079076382, -0.060032294781663607}, {0.68890880608499801, 0.039203575943248971}},
        {{0.5, 10.0}, {-0.098171553348559768, 1.3339181918462503}, {1.5448952202967528, -0.11533646527127338}},
    };
    for (const auto& p : points) {
        CAPTURE(p.s);
        CHECK(std::abs(eta_series(p.s) - p.eta) <= 1e-11);
        CHECK(std::abs(zeta_from_eta(p.s) - p.zeta) <= 1e-11);
    }
    CHECK(std::abs(zeta_from_eta({2.0, 0.0}) - 1.6449340668482264365) <= 1e-14);
    CHECK(std::abs(zeta_from_eta({3.0, 0.0}) - 1.2020569031595942854) <= 1e-14);
    CHECK(std::abs(zeta_from_eta({0.5, 0.0}) + 1.4603545088095868129) <= 1e-13);
}

TEST_CASE("eta and zeta vanish at the first zero") {
    const Complex rho{0.5, 14.1347251417};
    CHECK(std::abs(eta_series(rho)) <= 1e-9);
    CHECK(std::abs(zeta_from_eta(rho)) <= 1e-8);
}

TEST_CASE("eta_series symmetry and eta/zeta consistency") {
    for (double sigma : {0.25, 0.5, 0.75, 1.5, 2.0}) {
        for (double t : {0.5, 5.0, 14.1, 25.0, 40.0}) {
            const Complex s{sigma, t};
            const Complex eta = eta_series(s);
            CHECK(std::abs(eta_series(std::conj(s)) - std::conj(eta)) <= 1e-15 * (1.0 + std::abs(eta)));
            const Complex factor = 1.0 - std::exp((1.0 - s) * std::log(2.0));
            CHECK(std::abs(factor * zeta_from_eta(s) - eta) <= 1e-11);
        }
    }
}

TEST_CASE("eta_series and zeta_from_eta error paths") {
    CHECK_THROWS_AS(eta_series({0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(eta_series({-1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(eta_series({1.0, 0.0}, 0.0), DomainError);
    CHECK_THROWS_AS(eta_series({0.5, 14.0}, 1e-300), AccuracyError);
    CHECK_THROWS_AS(zeta_from_eta({1.0, 0.0}), SingularParameterError);
    // 1 - 2^(1-s) vanishes at s = 1 + 2 pi i / ln 2.
    CHECK_THROWS_AS(zeta_from_eta({1.0, 2.0 * kPi / std::log(2.0)}), SingularParameterError);
    CHECK_NOTHROW(eta_series({1.0, 2.0 * kPi / std::log(2.0)}));
}

TEST_CASE("theta and Z") {
    CHECK(riemann_siegel_theta(20.0) == doctest::Approx(1.186894808444484).epsilon(1e-10));
    CHECK(riemann_siegel_theta(50.0) == doctest::Approx(26.46136607016141).epsilon(1e-12));
    // Z is real by construction; its sign flips across the first zero.
    CHECK(hardy_z(14.0) * hardy_z(14.3) < 0.0);
    CHECK(hardy_z(10.0) < 0.0);
}

TEST_CASE("find_zeros examples") {
    auto first = find_zeros(14.0, 15.0, 0.05, 1e-9);
    REQUIRE(first.size() == 1);
    CHECK(std::fabs(first[0].ordinate - kZeroOrdinates[0]) <= 1e-8);

    auto second = find_zeros(20.0, 22.0, 0.05, 1e-9);
    REQUIRE(second.size() == 1);
    CHECK(std::fabs(second[0].ordinate - kZeroOrdinates[1]) <= 1e-8);

    CHECK(find_zeros(2.0, 10.0, 0.05, 1e-9).empty());
}

TEST_CASE("find_zeros records are well formed and reproducible") {
    const double refine_tol = 1e-9;
    const auto zeros = find_zeros(10.0, 50.0, 0.05, refine_tol);
    REQUIRE(zeros.size() == 10);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const ZeroRecord& z = zeros[i];
        CAPTURE(i);
        CHECK(z.bracket_lo < z.ordinate);
        CHECK(z.ordinate < z.bracket_hi);
        CHECK(z.bracket_hi - z.bracket_lo <= refine_tol);
        CHECK(std::isfinite(z.eta_residual));
        CHECK(std::fabs(z.ordinate - kZeroOrdinates[i]) <= 1e-8);
        if (i > 0) CHECK(z.ordinate - zeros[i - 1].ordinate > refine_tol);

        // Residual is small relative to the local slope of eta.
        const double h = 1e-6;
        const double slope = std::abs(eta_series({0.5, z.ordinate + h}) -
                                      eta_series({0.5, z.ordinate - h})) / (2.0 * h);
        CHECK(z.eta_residual <= 10.0 * refine_tol * slope);
        const double left = std::abs(eta_series({0.5, z.ordinate - refine_tol}));
        const double right = std::abs(eta_series({0.5, z.ordinate + refine_tol}));
        CHECK(z.eta_residual <= std::max(left, right));
    }

    const auto again = find_zeros(10.0, 50.0, 0.05, refine_tol);
    REQUIRE(again.size() == zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        CHECK(again[i].ordinate == zeros[i].ordinate);
        CHECK(again[i].bracket_lo == zeros[i].bracket_lo);
        CHECK(again[i].bracket_hi == zeros[i].bracket_hi);
        CHECK(again[i].eta_residual == zeros[i].eta_residual);
    }
}

TEST_CASE("find_zeros argument checks") {
    CHECK_THROWS_AS(find_zeros(0.0, 10.0), DomainError);
    CHECK_THROWS_AS(find_zeros(20.0, 10.0), DomainError);
    CHECK_THROWS_AS(find_zeros(10.0, 20.0, 0.6), DomainError);
    CHECK_THROWS_AS(find_zeros(10.0, 20.0, 0.05, 0.0), DomainError);
    CHECK_THROWS_AS(find_zeros(14.0, 15.0, 0.05, 1e-20), RefinementError);
}
