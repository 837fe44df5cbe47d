#pragma once

// Exact scattering solutions of the partner equations
//   Z'' + omega^2 Z = V_pm(x, m) Z,   x > 0, omega > 0,
// built from confluent hypergeometric functions of y = -2 i omega x.
//
// Branch conventions: i^{1/2} = e^{i pi/4}, i^{3/2} = e^{3 i pi/4}, and
// y^{1/2} = (2 omega x)^{1/2} e^{-i pi/4} (principal branch, arg y = -pi/2).
// The normalizations are C_{I1} = C_{I2} = 1.

#include "susyces/potential.hpp"
#include "susyces/specfun.hpp"

namespace susyces {

enum class Branch { I, II };
std::string_view to_string(Branch b);

/// R~_1 or R~_2.
enum class Component { One, Two };

/// Case (a) pairs R~_1 = e^{-y/2} 1F1(a1, 1/2; y) with its R~_2 partner and
/// produces branch I; case (b) starts from R~_1 = e^{-y/2} y^{1/2} 1F1(a1+1/2, 3/2; y)
/// and produces branch II.
enum class RTildeCase { A, B };

struct SolutionParams {
    double m = 1.0;
    double omega = 1.0;
    Complex a1;  ///< i m^2 / (2 omega)
    Complex a2;  ///< a1 + 1/2
    double b1 = 0.5;
    double b2 = 0.5;
};

struct CouplingConstants {
    Complex c_i1;
    Complex c_ii2;
    Complex c_i2;
    Complex c_ii1;
};

struct SolutionSample {
    double x = 0.0;
    Complex z;
    Complex dz;  ///< dZ/dx
};

inline const Complex kSqrtI{0.70710678118654752440, 0.70710678118654752440};       // e^{i pi/4}
inline const Complex kISqrtI{-0.70710678118654752440, 0.70710678118654752440};     // e^{3 i pi/4}
inline const Complex kOverallPhase{0.70710678118654752440, -0.70710678118654752440};  // e^{-i pi/4}

[[nodiscard]] Complex y_of_x(double x, double omega);
[[nodiscard]] Complex sqrt_y_of_x(double x, double omega);

[[nodiscard]] SolutionParams solution_params(double m, double omega);

/// Constants tied together by the first-order system for the R~ pair.
[[nodiscard]] CouplingConstants coupling_constants(double m, double omega, Complex c_i1 = 1.0,
                                                   Complex c_i2 = 1.0);

[[nodiscard]] Complex rtilde(Component j, RTildeCase c, double x, double m, double omega,
                             const SeriesConfig& cfg = {});

/// dR~_j/dx from the analytic 1F1 derivative.
[[nodiscard]] Complex rtilde_dx(Component j, RTildeCase c, double x, double m, double omega,
                                const SeriesConfig& cfg = {});

/// Z and dZ/dx for the requested branch and sector, assembled as
/// e^{-i pi/4} (R~_1 pm i R~_2).
[[nodiscard]] SolutionSample solution_Z(Branch branch, Sector sector, double x, double m, double omega,
                                        const SeriesConfig& cfg = {});

/// The same Z written term by term with the i^{3/2} prefactors, without going
/// through R~. Used to cross-check the decomposition.
[[nodiscard]] Complex solution_Z_explicit(Branch branch, Sector sector, double x, double m, double omega,
                                          const SeriesConfig& cfg = {});

/// W_x[Z^I, Z^II] = -+ omega i^{3/2} (2 omega)^{1/2} / m.
[[nodiscard]] Complex wronskian_Z(Sector sector, double m, double omega);

/// lambda_j of the Hermite form after y = z^2; equals -4 a_j.
[[nodiscard]] Complex hermite_lambda(Component j, double m, double omega);

/// Maps a solution of sector `from` to the partner sector through
/// (d/dx pm W) Z_mp = i omega Z_pm. The derivative of the image comes from the
/// partner relation with the original Z.
[[nodiscard]] SolutionSample susy_map(Sector from, const SolutionSample& sample, double m, double omega);

/// Z^I dZ^II - Z^II dZ^I.
[[nodiscard]] Complex sample_wronskian(const SolutionSample& first, const SolutionSample& second);

}  // namespace susyces
