#pragma once

// Superpotential W(x) = -m / sqrt(x) and the partner potentials
//   V_pm(x, m) = W^2 pm W' = m^2 / x pm (m/2) x^{-3/2},   x > 0.

#include <string_view>

namespace susyces {

enum class Sector { Plus, Minus };

/// +1 for Plus, -1 for Minus.
constexpr double sign(Sector s) { return s == Sector::Plus ? 1.0 : -1.0; }
constexpr Sector partner(Sector s) { return s == Sector::Plus ? Sector::Minus : Sector::Plus; }
std::string_view to_string(Sector s);

/// Coupling m and the sector selecting V+ or V-. Algebraic operations accept
/// either sign of m; solution-level code requires m > 0.
struct PotentialSpec {
    double m = 1.0;
    Sector sector = Sector::Plus;
};

struct CriticalStructure {
    double x0 = 0.0;      ///< zero of V-
    double x1 = 0.0;      ///< maximum of V-
    double w_plus = 0.0;  ///< W(x) as x -> +inf
};

[[nodiscard]] double superpotential(double x, double m);

/// dW/dx = m / (2 x^{3/2}).
[[nodiscard]] double superpotential_derivative(double x, double m);

/// Explicit form m^2/x pm (m/2)/(x sqrt x). Builds without NDEBUG also evaluate
/// the factorized form and assert agreement to 4 ulps of the term scale.
[[nodiscard]] double potential(double x, const PotentialSpec& spec);

/// W^2 pm W' from superpotential() and superpotential_derivative().
[[nodiscard]] double potential_factorized(double x, const PotentialSpec& spec);

/// -(m/x^2)(m pm 3/(4 sqrt x)).
[[nodiscard]] double potential_derivative(double x, const PotentialSpec& spec);

[[nodiscard]] CriticalStructure critical_structure(double m);

/// -m^2/4 + (pm m/2)^2, which vanishes identically.
[[nodiscard]] double ces_residual(double m);

/// V+(x, m) - V-(x, -m).
[[nodiscard]] double shape_invariance_gap(double x, double m);

/// |m^2/x| + |(m/2) x^{-3/2}|, the magnitude against which rounding in V is measured.
[[nodiscard]] double potential_term_scale(double x, double m);

/// Distance |a - b| in units of ulp(scale).
[[nodiscard]] double ulps_of(double a, double b, double scale);

}  // namespace susyces
