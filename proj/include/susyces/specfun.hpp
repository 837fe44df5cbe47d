#pragma once

// Confluent hypergeometric function 1F1(a, b; z) for complex a, z and real b,
// its z-derivative, the Kummer-transformed evaluation, the large-|z|
// asymptotic expansion, and a principal-branch complex log-gamma.

#include <complex>
#include <limits>

namespace susyces {

using Complex = std::complex<double>;

/// Parameters (a, b) of 1F1(a, b; .). b must not be zero or a negative integer.
struct ChfParams {
    Complex a;
    double b = 0.5;
};

struct SeriesConfig {
    double rel_tol = 1e-14;
    int max_terms = 10000;
    /// The Kummer transform is applied automatically when re(z) < kummer_threshold.
    /// Use -infinity to disable it.
    double kummer_threshold = 0.0;
    /// Largest |z| accepted by chf_1f1; beyond this the caller has to switch to
    /// ODE propagation.
    double max_abs_z = 100.0;
    /// Radius inside which the power series is summed directly. Outside it the
    /// value is continued along the ray from the origin by Taylor re-expansion
    /// of the confluent hypergeometric equation.
    double series_radius = 12.0;
};

[[nodiscard]] Complex chf_1f1(const ChfParams& p, Complex z, const SeriesConfig& cfg = {});

/// d/dz 1F1(a,b;z) = (a/b) 1F1(a+1, b+1; z).
[[nodiscard]] Complex chf_1f1_deriv(const ChfParams& p, Complex z, const SeriesConfig& cfg = {});

/// e^z 1F1(b-a, b; -z), with the inner evaluation never transformed back.
[[nodiscard]] Complex kummer_transform(const ChfParams& p, Complex z, const SeriesConfig& cfg = {});

/// Plain power series summed in double-double arithmetic with no Kummer
/// transform and no continuation. Accurate to about 1e-32 * e^{|z|} absolute.
[[nodiscard]] Complex chf_1f1_series(const ChfParams& p, Complex z, const SeriesConfig& cfg = {});

/// Principal branch of log Gamma(z). Matches the branch obtained by analytic
/// continuation from the positive real axis with the cut on (-inf, 0].
[[nodiscard]] Complex log_gamma(Complex z);

/// 1/Gamma(z); exactly zero at the poles.
[[nodiscard]] Complex rgamma(Complex z);

struct AsymptoticValue {
    Complex value;
    /// Magnitude of the first omitted term in each branch, summed.
    double error_estimate = 0.0;
};

inline constexpr double kAsymptoticMinAbsZ = 25.0;

/// Two-branch large-|z| expansion, each branch truncated at its smallest term.
/// Cross-check path only. Refuses |z| < 25.
[[nodiscard]] AsymptoticValue chf_asymptotic(const ChfParams& p, Complex z);

/// Principal power z^p = exp(p (ln|z| + i arg z)), arg in (-pi, pi].
[[nodiscard]] Complex principal_pow(Complex z, Complex p);

}  // namespace susyces
