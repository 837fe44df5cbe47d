#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "susyces/specfun.hpp"
#include "susyces/verify.hpp"

using namespace susyces;
using testing::rel;
using testing::throws_code;

namespace {
const Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("chf_1f1 trivial values") {
    CHECK(chf_1f1({Complex(0.7, -2.0), 0.5}, 0.0) == Complex(1.0, 0.0));
    CHECK(chf_1f1({0.0, 0.5}, Complex(3.0, 4.0)) == Complex(1.0, 0.0));
    CHECK(rel(chf_1f1({1.0, 1.0}, 2.0), 7.389056098930650) < 1e-15);
    // 1F1(a, a; z) = e^z holds for complex z too, on both sides of the Kummer threshold.
    for (Complex z : {Complex(-3.0, 2.0), Complex(0.0, -20.0), Complex(5.0, 1.0)}) {
        CHECK(rel(chf_1f1({Complex(0.5, 0.0), 0.5}, z), std::exp(z)) < 1e-13);
    }
}

TEST_CASE("chf_1f1 against the golden table") {
    const auto rows = load_golden_chf(golden_dir());
    REQUIRE(rows.size() >= 20);
    for (const auto& r : rows) {
        CAPTURE(r.a);
        CAPTURE(r.z);
        CHECK(rel(chf_1f1({r.a, r.b}, r.z), r.f) < 1e-12);
    }
}

TEST_CASE("golden point (a = i/2, b = 1/2, z = -2i)") {
    const Complex want(2.8691774325111776834, -1.5568702688029645883);
    CHECK(rel(chf_1f1({0.5 * kI, 0.5}, Complex(0.0, -2.0)), want) < 1e-14);
    // Plain double-double series and the Kummer-transformed evaluation agree with it.
    CHECK(rel(chf_1f1_series({0.5 * kI, 0.5}, Complex(0.0, -2.0)), want) < 1e-15);
    CHECK(rel(kummer_transform({0.5 * kI, 0.5}, Complex(0.0, -2.0)), want) < 1e-14);
}

TEST_CASE("chf_1f1_deriv") {
    CHECK(std::abs(chf_1f1_deriv({0.0, 0.5}, Complex(1.0, 1.0))) == 0.0);
    CHECK(rel(chf_1f1_deriv({1.0, 1.0}, 0.7), std::exp(0.7)) < 1e-15);
    // (a/b) 1F1(a+1, b+1; z) with the shifted row of the golden table: a = i, b = 3/2, z = -5i.
    Complex shifted;
    for (const auto& r : load_golden_chf(golden_dir())) {
        if (r.a == Complex(1.0, 1.0) && r.b == 2.5 && r.z == Complex(0.0, -5.0)) {
            shifted = r.f;
        }
    }
    REQUIRE(std::abs(shifted) > 0.0);
    CHECK(rel(chf_1f1_deriv({kI, 1.5}, Complex(0.0, -5.0)), kI / 1.5 * shifted) < 1e-13);
}

TEST_CASE("kummer_transform") {
    CHECK(rel(kummer_transform({0.5, 0.5}, 1.0), std::exp(1.0)) < 1e-15);
    CHECK(rel(kummer_transform({0.0, 0.5}, Complex(0.0, 2.0)), 1.0) < 1e-15);
    const ChfParams p{Complex(0.3, 0.2), 1.5};
    const Complex z(4.0, -1.0);
    CHECK(rel(kummer_transform(p, z), chf_1f1(p, z)) < 1e-10);
}

TEST_CASE("errors") {
    CHECK(throws_code([] { return chf_1f1({1.0, 0.0}, 1.0); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return chf_1f1({1.0, -3.0}, 1.0); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return chf_1f1({kI, 0.5}, Complex(0.0, -120.0)); }, ErrorCode::SeriesRangeExceeded));
    SeriesConfig tight;
    tight.max_terms = 3;
    CHECK(throws_code([&] { return chf_1f1({kI, 0.5}, Complex(0.0, -5.0), tight); }, ErrorCode::NonConvergence));
    CHECK(throws_code([] { return log_gamma(0.0); }, ErrorCode::PoleAtNonPositiveInteger));
    CHECK(throws_code([] { return log_gamma(-4.0); }, ErrorCode::PoleAtNonPositiveInteger));
    CHECK(throws_code([] { return chf_asymptotic({kI, 0.5}, Complex(0.0, -24.0)); }, ErrorCode::ArgumentTooSmall));
}

TEST_CASE("series stays accurate far along the imaginary axis") {
    // The plain series loses about e^{|z|} / 1e32 in double-double; the
    // continuation must keep full precision out to |z| = 90.
    const ChfParams p{0.5 * kI, 0.5};
    for (double r : {10.0, 30.0, 60.0, 90.0}) {
        const Complex z(0.0, -r);
        CAPTURE(r);
        const Complex f = chf_1f1(p, z);
        const Complex k = kummer_transform(p, z);
        CHECK(std::abs(f - k) / std::abs(f) < 1e-13);
    }
}

TEST_CASE("log_gamma") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(2.0)) < 1e-15);
    CHECK(rel(log_gamma(0.5), 0.57236494292470008707) < 1e-14);
    CHECK(rel(log_gamma(Complex(1.0, 2.0)), golden_value(golden_dir(), "log_gamma_1+2i")) < 1e-13);
    // Branch: continuous from the positive axis, so Im jumps by -2 pi across (-2, -1).
    CHECK(rel(log_gamma(-1.5), golden_value(golden_dir(), "log_gamma_-1.5+0i")) < 1e-13);
    CHECK(rel(log_gamma(Complex(-3.3, 4.1)), golden_value(golden_dir(), "log_gamma_-3.3+4.1i")) < 1e-12);
    CHECK(rel(log_gamma(Complex(40.0, -70.0)), golden_value(golden_dir(), "log_gamma_40-70i")) < 1e-14);
    // Conjugate symmetry.
    const Complex z(2.3, 1.7);
    CHECK(std::abs(log_gamma(std::conj(z)) - std::conj(log_gamma(z))) < 1e-14);
    // Recurrence ln Gamma(z+1) = ln Gamma(z) + ln z on the principal branch for re z > 0.
    for (Complex w : {Complex(0.3, 5.0), Complex(7.0, -2.0), Complex(20.0, 30.0)}) {
        CHECK(std::abs(log_gamma(w + 1.0) - log_gamma(w) - std::log(w)) < 1e-12);
    }
}

TEST_CASE("rgamma") {
    CHECK(rgamma(0.0) == Complex(0.0, 0.0));
    CHECK(rgamma(-3.0) == Complex(0.0, 0.0));
    CHECK(rel(rgamma(5.0), 1.0 / 24.0) < 1e-14);
    CHECK(rel(rgamma(-0.5), -1.0 / (2.0 * std::sqrt(kPi))) < 1e-14);
}

TEST_CASE("chf_asymptotic") {
    CHECK(rel(chf_asymptotic({1.0, 1.0}, 50.0).value, std::exp(50.0)) < 1e-10);
    CHECK(rel(chf_asymptotic({0.0, 0.5}, Complex(0.0, 40.0)).value, 1.0) < 1e-12);
    const Complex golden_60(-3.1688145970141144666, -0.9025844430997981063);
    const auto v = chf_asymptotic({0.5 * kI, 0.5}, Complex(0.0, -60.0));
    CHECK(rel(v.value, chf_1f1({0.5 * kI, 0.5}, Complex(0.0, -60.0))) < 1e-10);
    CHECK(v.error_estimate < 1e-10);
    CHECK(rel(v.value, golden_60) < 1e-10);
}

TEST_CASE("principal_pow branch") {
    const Complex y(0.0, -2.0);
    CHECK(std::abs(principal_pow(y, 0.5) - std::sqrt(2.0) * std::exp(Complex(0.0, -kPi / 4.0))) < 1e-15);
    CHECK(std::abs(principal_pow(-1.0, 0.5) - kI) < 1e-15);
}

TEST_CASE("property: Kummer identity on a random grid") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SeriesConfig direct;
    direct.kummer_threshold = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 300; ++i) {
        const Complex a(5.0 * u(rng) / std::sqrt(2.0), 5.0 * u(rng) / std::sqrt(2.0));
        const Complex z(20.0 * u(rng) / std::sqrt(2.0), 20.0 * u(rng) / std::sqrt(2.0));
        const double b = i % 2 ? 0.5 : 1.5;
        const Complex f = chf_1f1({a, b}, z, direct);
        CAPTURE(a);
        CAPTURE(z);
        CHECK(std::abs(f - kummer_transform({a, b}, z)) / (1.0 + std::abs(f)) <= 1e-10);
    }
}

TEST_CASE("verification checks for specfun pass") {
    CHECK(checks::chf_derivative_fd().passed);
    CHECK(checks::chf_wronskian().passed);
    CHECK(checks::chf_contiguous().passed);
    CHECK(checks::log_gamma_reflection().passed);
    CHECK(checks::chf_asymptotic_vs_oracle().passed);
    CHECK(checks::frobenius_vs_chf().passed);
}

}
