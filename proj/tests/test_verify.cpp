#include <doctest.h>

#include <cmath>
#include <vector>

#include "fraczeta/integral.hpp"
#include "fraczeta/verify.hpp"
#include "oracle.hpp"

using namespace fraczeta;

namespace {

constexpr double kPi = 3.14159265358979323846;

ZeroRecord zero_at(double ordinate, double half_width = 5e-10) {
    return {ordinate, ordinate - half_width, ordinate + half_width, 0.0};
}

}  // namespace

TEST_CASE("identity_lhs by direct arithmetic") {
    CHECK(std::abs(identity_lhs({2.0, 0.0}) - 5.5) <= 1e-15);
    CHECK(std::abs(identity_lhs({0.5, 0.0}) - (std::sqrt(2.0) - 1.5)) <= 1e-15);
    CHECK(std::abs(identity_lhs({3.0, 0.0}) - 9.0) <= 1e-14);
    CHECK_THROWS_AS(identity_lhs({1.0, 0.0}), SingularParameterError);
}

TEST_CASE("identity_rhs at real points") {
    const BoundedValue two = identity_rhs({2.0, 0.0});
    CHECK(std::abs(two.value - 0.565197799455320691) <= 1e-12);
    CHECK(two.error_bound <= 1e-8);
    // 9 - 7 zeta(3), mpmath
    CHECK(std::abs(identity_rhs({3.0, 0.0}).value - 0.585601677882840002) <= 1e-12);
    CHECK_THROWS_AS(identity_rhs({1.0, 0.0}), SingularParameterError);
    CHECK_THROWS_AS(identity_rhs({0.0, 5.0}), DomainError);
}

TEST_CASE("residual law at s = 2 against brute-force quadrature") {
    const Complex s{2.0, 0.0};
    const Complex brute_rhs =
        s * oracle::brute_force_improper([](double t) { return oracle::frac(t + 0.5); }, s, 10000,
                                         1.5, 1e-13);
    const Complex measured = brute_rhs - identity_lhs(s);
    CHECK(std::abs(measured + 3.0 * kPi * kPi / 6.0) <= 1e-9);
    CHECK(std::abs(residual_closed_form(s) + 3.0 * kPi * kPi / 6.0) <= 1e-13);
    CHECK(std::abs(residual_closed_form(s) - measured) <= 1e-9);
}

TEST_CASE("residual_closed_form values") {
    // -(sqrt 2 - 1) zeta(1/2), mpmath
    CHECK(std::abs(residual_closed_form({0.5, 0.0}) - 0.604898643421630370) <= 1e-12);
    CHECK(std::abs(residual_closed_form({0.5, 14.134725141734693790})) <= 1e-9);
    CHECK_THROWS_AS(residual_closed_form({1.0, 0.0}), SingularParameterError);
}

TEST_CASE("verify_zero at true and corrupted zeros") {
    const VerificationRecord first = verify_zero(zero_at(14.1347251417));
    CHECK(first.passed);
    CHECK(first.residual <= 1e-5);
    CHECK(first.predicted_residual <= 1e-8);

    const VerificationRecord second = verify_zero(zero_at(21.0220396388));
    CHECK(second.passed);

    const VerificationRecord bogus = verify_zero(zero_at(14.20));
    CHECK_FALSE(bogus.passed);
    CHECK(bogus.residual >= 0.01);
    // |(2^s - 1) zeta(s)| at 0.5 + 14.2i, mpmath
    CHECK(bogus.predicted_residual == doctest::Approx(0.122996621117125641).epsilon(1e-8));
    CHECK(std::fabs(bogus.residual - bogus.predicted_residual) <= bogus.error_budget);

    ZeroRecord broken = zero_at(14.13);
    broken.bracket_hi = 14.0;
    CHECK_THROWS_AS(verify_zero(broken), DomainError);
}

TEST_CASE("verification is conjugate symmetric") {
    const Complex rho{0.5, 14.134725141734693790};
    const VerificationRecord up = verify_point(rho, 1e-9);
    const VerificationRecord down = verify_point(std::conj(rho), 1e-9);
    CHECK(std::abs(down.lhs - std::conj(up.lhs)) <= 1e-15 * std::abs(up.lhs));
    CHECK(std::abs(down.rhs - std::conj(up.rhs)) <= 1e-15 * std::abs(up.rhs));
    CHECK(std::fabs(down.residual - up.residual) <= 1e-15);
    CHECK(down.passed == up.passed);
}

TEST_CASE("zeta integral at located zeros gives rho/(rho - 1)") {
    for (const auto& z : find_zeros(10.0, 35.0)) {
        const Complex rho{0.5, z.ordinate};
        const VerificationRecord rec = verify_zero(z);
        const IntegralResult frac = integral_improper(IntegrandKind::Frac, rho);
        CHECK(std::abs(rho / (rho - 1.0) - rho * frac.value) <= rec.error_budget);
    }
}

TEST_CASE("the [1/2, 1) piece integrates to 2^s - 1") {
    for (Complex s : {Complex(2.0, 0.0), Complex(0.5, 14.13), Complex(0.25, -30.0), Complex(3.0, 7.0)}) {
        const Complex piece = s * piece_integral_affine(1.0, 0.0, 0.5, 1.0, s);
        CHECK(std::abs(piece - (std::exp(s * std::log(2.0)) - 1.0)) <= 1e-14 * std::abs(piece));
    }
}

TEST_CASE("scan_grid examples") {
    const std::vector<double> two{2.0}, zero{0.0};
    auto rows = scan_grid(two, zero);
    REQUIRE(rows.size() == 1);
    CHECK(std::abs(rows[0].residual_measured + 4.9348022005446793) <= 1e-9);
    CHECK(std::abs(rows[0].residual_predicted + 4.9348022005446793) <= 1e-12);
    CHECK(rows[0].passed);

    const std::vector<double> half{0.5}, at_zero{14.1347251417};
    rows = scan_grid(half, at_zero);
    REQUIRE(rows.size() == 1);
    CHECK(std::abs(rows[0].residual_measured) <= 1e-8);
    CHECK(rows[0].passed);

    const std::vector<double> ten{10.0};
    rows = scan_grid(half, ten);
    CHECK(std::abs(rows[0].residual_measured) > 0.1);
    CHECK(rows[0].passed);
}

TEST_CASE("scan_grid keeps failed points and row-major order") {
    const std::vector<double> sigmas{1.0, 2.0}, ts{0.0, 3.0};
    const auto rows = scan_grid(sigmas, ts);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].s == Complex(1.0, 0.0));
    CHECK(rows[0].error.has_value());
    CHECK_FALSE(rows[0].passed);
    CHECK(rows[1].s == Complex(1.0, 3.0));
    CHECK(rows[2].s == Complex(2.0, 0.0));
    CHECK(rows[3].s == Complex(2.0, 3.0));
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK_FALSE(rows[i].error.has_value());
        CHECK(rows[i].passed);
    }

    const std::vector<double> bad{3.5}, empty;
    CHECK_THROWS_AS(scan_grid(bad, ts), DomainError);
    CHECK_THROWS_AS(scan_grid(sigmas, empty), DomainError);
}

TEST_CASE("residual vanishes in the strip only near zeros") {
    const auto zeros = find_zeros(10.0, 50.0);
    std::vector<double> sigmas{0.25, 0.5, 0.75};
    std::vector<double> ts;
    for (double t = 10.0; t <= 50.0; t += 0.25) ts.push_back(t);
    const auto rows = scan_grid(sigmas, ts);
    for (const auto& row : rows) {
        REQUIRE_FALSE(row.error.has_value());
        double distance = 1e9;
        for (const auto& z : zeros) {
            distance = std::min(distance, std::abs(row.s - Complex(0.5, z.ordinate)));
        }
        if (distance >= 0.3) {
            CAPTURE(row.s);
            CHECK(std::abs(row.residual_measured) >= 10.0 * kDefaultPassFloor);
        }
        CHECK(row.passed);
    }
}
