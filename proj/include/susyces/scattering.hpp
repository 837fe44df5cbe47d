#pragma once

// Asymptotic phase extraction for both partner sectors and the supersymmetric
// phase-shift relation delta+ = delta- + (n + 1/2) pi.
//
// Individual phases carry the Coulomb-type logarithmic distortion of the
// m^2/x tail; only the difference between sectors is certified.

#include <vector>

#include "susyces/oracle.hpp"

namespace susyces {

/// Which real solution of a complex Z is used: re(Z) or im(Z).
enum class SolutionPart { Real, Imag };

struct PhaseExtraction {
    double x_eval = 0.0;
    double delta_raw = 0.0;  ///< atan2(omega u, u') - omega x, in (-pi/2, pi/2]
    double coulomb_eta = 0.0;
    double delta_log_corrected = 0.0;  ///< delta_raw + eta ln(2 omega x), in (-pi/2, pi/2]; tail-distorted
};

struct PhaseRow {
    double x = 0.0;
    double delta_minus = 0.0;
    double delta_plus = 0.0;
    double diff_mod_pi = 0.0;
    double residual = 0.0;
};

struct PhaseDifferenceResult {
    double diff_mod_pi = 0.0;  ///< in [0, pi)
    double residual_to_half_pi = 0.0;
    std::vector<double> x_sequence;
    std::vector<PhaseRow> table;
    bool converged = false;
};

struct PhaseConfig {
    double x_max = 1e4;
    double tolerance = 1e-3;
    /// Start of the far-field sequence; 0 selects 20 / omega.
    double x_match = 0.0;
    int max_doublings = 14;
    SolutionPart part = SolutionPart::Real;
    /// Remove the first-order WKB phase still to be accrued from the
    /// pm (m/2) x^{-3/2} term beyond each evaluation point.
    bool short_range_tail = true;
    /// Use sqrt(omega^2 - V) rather than omega in the atan2.
    bool local_wavenumber = true;
    IntegratorConfig integrator{};
};

inline constexpr double kMinOmegaX = 20.0;

/// eta = m^2 / (2 omega).
[[nodiscard]] double coulomb_eta(double m, double omega);

/// Reduces to (-pi/2, pi/2].
[[nodiscard]] double reduce_mod_pi(double phase);

/// local_wavenumber replaces omega inside the atan2 when positive; the WKB
/// value sqrt(omega^2 - V(x)) removes the O(V / omega^2) ripple of the estimate.
[[nodiscard]] PhaseExtraction local_phase(const SolutionSample& sample, double omega, double coulomb_eta,
                                          SolutionPart part = SolutionPart::Real, double local_wavenumber = 0.0);

/// -+ m / (2 omega sqrt x): the first-order WKB phase that the pm (m/2) x^{-3/2}
/// term still contributes between x and infinity.
[[nodiscard]] double short_range_tail_phase(Sector sector, double m, double omega, double x);

/// Builds a V- solution, maps it to V+ through the intertwining relation,
/// propagates both along x_k = x_match 2^k and reports (delta+ - delta-) mod pi.
[[nodiscard]] PhaseDifferenceResult phase_difference(double m, double omega, const PhaseConfig& cfg = {});

/// Harness for the general relation e^{2 i delta-} = (w - i omega)/(w + i omega) e^{2 i delta+}
/// with a constant superpotential w: maps sin(omega x + delta_minus) through
/// (d/dx + w) and returns the mod-2pi mismatch of 2 (delta- - delta+).
[[nodiscard]] double synthetic_superpotential_residual(double w, double omega, double delta_minus);

}  // namespace susyces
