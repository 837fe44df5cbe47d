#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "susyces/closedform.hpp"
#include "susyces/oracle.hpp"
#include "susyces/verify.hpp"

using namespace susyces;
using testing::rel;
using testing::rel1;
using testing::throws_code;

namespace {
const Complex kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
const Complex kE3(std::cos(3.0 * kPi / 4.0), std::sin(3.0 * kPi / 4.0));
}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("variable map") {
    CHECK(y_of_x(1.0, 0.5) == Complex(0.0, -1.0));
    CHECK(std::abs(sqrt_y_of_x(1.0, 0.5) - std::exp(Complex(0.0, -kPi / 4.0))) < 4e-16);
    CHECK(std::abs(y_of_x(1e-300, 1.0)) < 1e-299);
    CHECK(throws_code([] { return y_of_x(0.0, 1.0); }, ErrorCode::DomainError));
    CHECK(throws_code([] { return y_of_x(1.0, 0.0); }, ErrorCode::DomainError));
    // Principal branch agrees with the complex sqrt for every physical y.
    for (double x : {1e-6, 0.3, 7.0, 40.0}) {
        CHECK(std::abs(sqrt_y_of_x(x, 1.3) - std::sqrt(y_of_x(x, 1.3))) <= 1e-15 * std::abs(sqrt_y_of_x(x, 1.3)));
    }
}

TEST_CASE("solution_params") {
    const auto p = solution_params(1.0, 0.5);
    CHECK(p.a1 == kI);
    CHECK(p.a2 == Complex(0.5, 1.0));
    CHECK(p.b1 == 0.5);
    CHECK(p.b2 == 0.5);
    CHECK(solution_params(2.0, 1.0).a1 == Complex(0.0, 2.0));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    for (int i = 0; i < 100; ++i) {
        CHECK(solution_params(u(rng), u(rng)).a1.real() == 0.0);
    }
    CHECK(throws_code([] { return solution_params(0.0, 1.0); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return solution_params(1.0, -1.0); }, ErrorCode::InvalidParams));
}

TEST_CASE("coupling constants") {
    const double m = 1.3;
    const double w = 0.7;
    const auto cc = coupling_constants(m, w);
    const Complex sqrt_i = std::exp(Complex(0.0, kPi / 4.0));
    CHECK(std::abs(cc.c_ii2 - 2.0 * std::sqrt(2.0 * w) * sqrt_i * solution_params(m, w).a1 / m) < 1e-15);
    CHECK(std::abs(cc.c_ii1 - std::sqrt(2.0 * w) * sqrt_i / (2.0 * m)) < 1e-15);
    const auto scaled = coupling_constants(m, w, 2.0, kI);
    CHECK(std::abs(scaled.c_ii2 - 2.0 * cc.c_ii2) < 1e-15);
    CHECK(std::abs(scaled.c_ii1 - kI * cc.c_ii1) < 1e-15);
}

TEST_CASE("rtilde") {
    CHECK(rel(rtilde(Component::One, RTildeCase::A, 1e-14, 1.0, 1.0), 1.0) < 1e-12);
    CHECK(std::abs(rtilde(Component::One, RTildeCase::B, 1e-14, 1.0, 1.0)) < 1e-6);
    CHECK(rel(rtilde(Component::Two, RTildeCase::A, 1.0, 1.0, 0.5), golden_value(golden_dir(), "rtilde2_a_m1_w0.5_x1")) <
          1e-13);
}

TEST_CASE("solution_Z small-x limits") {
    const Complex phase = std::exp(Complex(0.0, -kPi / 4.0));
    for (Sector s : {Sector::Plus, Sector::Minus}) {
        CHECK(rel(solution_Z(Branch::I, s, 1e-20, 1.0, 1.0).z, phase) < 1e-9);
    }
    const double w = 1.0;
    const double m = 1.0;
    CHECK(rel(solution_Z(Branch::II, Sector::Plus, 1e-20, m, w).z, phase * std::sqrt(2.0 * w) * kE3 / (2.0 * m)) < 1e-9);
}

TEST_CASE("solution_Z golden values") {
    CHECK(rel(solution_Z(Branch::I, Sector::Plus, 2.0, 1.0, 1.0).z, golden_value(golden_dir(), "zI_plus_m1_w1_x2")) <
          1e-13);
    CHECK(rel(solution_Z(Branch::I, Sector::Minus, 3.0, 2.0, 0.5).z,
              golden_value(golden_dir(), "zI_minus_m2_w0.5_x3")) < 1e-13);
    // The Frobenius oracle reproduces the same number with no 1F1 call.
    CHECK(rel(frobenius_solution_Z(Branch::I, Sector::Plus, 2.0, 1.0, 1.0),
              golden_value(golden_dir(), "zI_plus_m1_w1_x2")) < 1e-13);
}

TEST_CASE("explicit display form matches the R~ construction") {
    for (Branch b : {Branch::I, Branch::II}) {
        for (Sector s : {Sector::Plus, Sector::Minus}) {
            for (double x : {0.01, 0.5, 3.0, 15.0}) {
                CHECK(rel(solution_Z_explicit(b, s, x, 1.2, 0.8), solution_Z(b, s, x, 1.2, 0.8).z) < 1e-13);
            }
        }
    }
}

TEST_CASE("dZ/dx matches a finite difference") {
    const double h = 1e-5;
    for (Branch b : {Branch::I, Branch::II}) {
        for (Sector s : {Sector::Plus, Sector::Minus}) {
            for (double x : {0.2, 2.0, 11.0}) {
                const Complex fd =
                    (solution_Z(b, s, x + h, 1.0, 1.0).z - solution_Z(b, s, x - h, 1.0, 1.0).z) / (2.0 * h);
                CHECK(rel1(solution_Z(b, s, x, 1.0, 1.0).dz, fd) < 1e-8);
            }
        }
    }
}

TEST_CASE("wronskian_Z constants") {
    CHECK(std::abs(wronskian_Z(Sector::Plus, 1.0, 0.5) + kE3 / 2.0) < 1e-15);
    CHECK(std::abs(wronskian_Z(Sector::Minus, 1.0, 0.5) - kE3 / 2.0) < 1e-15);
    CHECK(std::abs(wronskian_Z(Sector::Plus, 2.0, 2.0) + 2.0 * kE3) < 1e-15);
    CHECK(throws_code([] { return wronskian_Z(Sector::Plus, 0.0, 1.0); }, ErrorCode::InvalidParams));
}

TEST_CASE("hermite_lambda") {
    CHECK(hermite_lambda(Component::One, 1.0, 1.0) == Complex(0.0, -2.0));
    CHECK(hermite_lambda(Component::Two, 1.0, 1.0) == Complex(-2.0, -2.0));
    CHECK(checks::hermite_identity(100).passed);
}

TEST_CASE("susy_map") {
    const auto zp = solution_Z(Branch::I, Sector::Plus, 1.0, 1.0, 1.0);
    const auto back = susy_map(Sector::Minus, susy_map(Sector::Plus, zp, 1.0, 1.0), 1.0, 1.0);
    CHECK(rel1(back.z, zp.z) < 1e-9);
    CHECK(rel1(back.dz, zp.dz) < 1e-9);
    for (double x : {0.1, 1.0, 6.0, 18.0}) {
        const auto zm = solution_Z(Branch::I, Sector::Minus, x, 1.0, 1.0);
        CHECK(rel1(susy_map(Sector::Minus, zm, 1.0, 1.0).z, solution_Z(Branch::I, Sector::Plus, x, 1.0, 1.0).z) < 1e-12);
    }
    CHECK(throws_code([&] { return susy_map(Sector::Plus, zp, 1.0, 0.0); }, ErrorCode::InvalidParams));
}

TEST_CASE("range guard") {
    // |y| = 2 omega x beyond the evaluator's reach.
    CHECK(throws_code([] { return solution_Z(Branch::I, Sector::Plus, 60.0, 1.0, 1.0); },
                      ErrorCode::SeriesRangeExceeded));
    CHECK(throws_code([] { return solution_Z(Branch::I, Sector::Plus, -1.0, 1.0, 1.0); }, ErrorCode::DomainError));
}

TEST_CASE("invariants on the standard parameter sets") {
    CHECK(checks::wronskian_constancy(kStandardParams).passed);
    CHECK(checks::wronskian_conditioned(kStandardParams).passed);
    CHECK(checks::intertwining(kStandardParams).passed);
    CHECK(checks::rtilde_system(kStandardParams).passed);
    CHECK(checks::decomposition_identity(kStandardParams).passed);
    CHECK(checks::closed_form_golden(golden_dir()).passed);
}

TEST_CASE("Schrodinger residual") {
    CHECK(checks::schrodinger_residual(kStandardParams, 0.1, 20.0, 60).passed);
    // Close to the origin the stencil error scales as h^4: shrinking h by 2 cuts it by about 16.
    std::vector<SolutionSample> coarse;
    std::vector<SolutionSample> fine;
    for (int k = -2; k <= 2; ++k) {
        coarse.push_back(solution_Z(Branch::I, Sector::Plus, 0.052 + k * 1e-3, 2.0, 0.5));
        fine.push_back(solution_Z(Branch::I, Sector::Plus, 0.052 + k * 5e-4, 2.0, 0.5));
    }
    const double rc = residual_schrodinger(coarse, PotentialSpec{2.0, Sector::Plus}, 0.5).max_error;
    const double rf = residual_schrodinger(fine, PotentialSpec{2.0, Sector::Plus}, 0.5).max_error;
    CHECK(rc / rf == doctest::Approx(16.0).epsilon(0.2));
    CHECK(checks::schrodinger_residual(kStandardParams, 0.05, 0.1, 20, 2.5e-4).passed);
}

}
