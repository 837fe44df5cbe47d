#pragma once

// Numerical ground truth that does not use the closed forms: an adaptive
// Dormand-Prince 5(4) integrator for Z'' = (V - omega^2) Z, a Frobenius-series
// solver for the confluent equation in y, and finite-difference residuals.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "susyces/closedform.hpp"
#include "susyces/ddouble.hpp"
#include "susyces/report.hpp"

namespace susyces {

struct ODEProblem {
    PotentialSpec spec;
    double omega = 1.0;
    double x_start = 1.0;
    double x_end = 2.0;
    SolutionSample init;
};

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 10'000'000;
    /// Number of equally spaced output samples over [x_start, x_end], both ends included.
    int dense_points = 2;
};

/// Smallest admissible integration start for coupling m: 1e-3 / m^2.
[[nodiscard]] double integration_floor(double m);

using PotentialFn = std::function<double(double)>;

struct IntegrationStats {
    long accepted = 0;
    long rejected = 0;
};

/// Integrates from `init` (at init.x) and returns samples at each x in `x_out`,
/// which must be monotone in the direction of integration. The step sequence
/// depends only on the start, the furthest output point and the config.
[[nodiscard]] std::vector<SolutionSample> integrate_to(const PotentialFn& v, double omega,
                                                       const SolutionSample& init, std::span<const double> x_out,
                                                       const IntegratorConfig& cfg, IntegrationStats* stats = nullptr);

/// Samples at cfg.dense_points equally spaced points of [x_start, x_end].
[[nodiscard]] std::vector<SolutionSample> integrate(const ODEProblem& problem, const IntegratorConfig& cfg,
                                                    IntegrationStats* stats = nullptr);

enum class FrobeniusExponent { Zero, Half };

/// R^ = y^sigma sum_k c_k y^k for y R^'' + (1/2 - y) R^' - A_j R^ = 0 with
/// A_j = (1 - eps)/4 + i m^2 / (2 omega), generated from the indicial
/// recurrence in double-double.
class FrobeniusSeries {
public:
    FrobeniusSeries(Component j, FrobeniusExponent exponent, double m, double omega, double y_magnitude_max);

    [[nodiscard]] const std::vector<DDComplex>& coefficients() const { return coeffs_; }
    [[nodiscard]] Complex coefficient(std::size_t k) const { return coeffs_.at(k).to_complex(); }
    [[nodiscard]] double sigma() const { return sigma_; }
    [[nodiscard]] Complex parameter() const { return a_; }
    [[nodiscard]] double radius() const { return radius_; }

    /// y^sigma sum c_k y^k; |y| must not exceed the radius the table was built for.
    [[nodiscard]] Complex evaluate(Complex y) const;

private:
    Complex a_;
    double sigma_ = 0.0;
    double radius_ = 0.0;
    std::vector<DDComplex> coeffs_;
};

[[nodiscard]] FrobeniusSeries frobenius_series_solution(Component j, FrobeniusExponent exponent, double m,
                                                        double omega, double y_magnitude_max);

/// Z value assembled from Frobenius series only (no specfun). Golden-value path.
[[nodiscard]] Complex frobenius_solution_Z(Branch branch, Sector sector, double x, double m, double omega);

/// Five-point residual |Z'' + omega^2 Z - V Z| / (max(1,|Z|) omega^2)
/// over the interior of a uniform grid.
[[nodiscard]] CheckReport residual_schrodinger(std::span<const SolutionSample> samples, const PotentialFn& v,
                                               double omega, double tolerance = 1e-6,
                                               std::string name = "schrodinger_residual");
[[nodiscard]] CheckReport residual_schrodinger(std::span<const SolutionSample> samples, const PotentialSpec& spec,
                                               double omega, double tolerance = 1e-6,
                                               std::string name = "schrodinger_residual");

/// Starts from the closed form at x_match and integrates out to x_far; returns
/// cfg.dense_points samples spanning [x_match, x_far].
[[nodiscard]] std::vector<SolutionSample> propagate_to_asymptotic(Branch branch, Sector sector, double m,
                                                                  double omega, double x_match, double x_far,
                                                                  const IntegratorConfig& cfg = {});

}  // namespace susyces
