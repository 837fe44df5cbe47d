#include "susyces/scattering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "susyces/error.hpp"

namespace susyces {

namespace {

constexpr double kPi = std::numbers::pi;
// A decreasing trend needs at least three points of the sequence.
constexpr std::size_t kMinSequencePoints = 3;

void require_positive(double m, double omega)
{
    if (!(m > 0.0) || !std::isfinite(m) || !(omega > 0.0) || !std::isfinite(omega)) {
        std::ostringstream os;
        os << "need m > 0 and omega > 0 (got m = " << m << ", omega = " << omega << ")";
        throw Error(ErrorCode::InvalidParams, os.str());
    }
}

double pick(Complex z, SolutionPart part) { return part == SolutionPart::Real ? z.real() : z.imag(); }

double mod_pi_nonnegative(double d)
{
    double r = std::fmod(d, kPi);
    if (r < 0.0) {
        r += kPi;
    }
    return r >= kPi ? 0.0 : r;
}

}  // namespace

double coulomb_eta(double m, double omega)
{
    require_positive(m, omega);
    return m * m / (2.0 * omega);
}

double reduce_mod_pi(double phase)
{
    double r = std::remainder(phase, kPi);
    if (r <= -kPi / 2.0) {
        r += kPi;
    }
    return r;
}

PhaseExtraction local_phase(const SolutionSample& sample, double omega, double eta, SolutionPart part,
                            double local_wavenumber)
{
    if (!(omega > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "omega must be positive");
    }
    const double kx = omega * sample.x;
    if (kx < kMinOmegaX) {
        std::ostringstream os;
        os << "omega x = " << kx << " is below " << kMinOmegaX;
        throw Error(ErrorCode::TooCloseToTurningRegion, os.str());
    }
    const double u = pick(sample.z, part);
    const double du = pick(sample.dz, part);
    if (u == 0.0 && du == 0.0) {
        throw Error(ErrorCode::DegenerateSample, "u and u' both vanish");
    }
    PhaseExtraction p;
    p.x_eval = sample.x;
    p.coulomb_eta = eta;
    const double k = local_wavenumber > 0.0 ? local_wavenumber : omega;
    const double theta = std::atan2(k * u, du);
    p.delta_raw = reduce_mod_pi(theta - kx);
    p.delta_log_corrected = reduce_mod_pi(p.delta_raw + eta * std::log(2.0 * kx));
    return p;
}

double short_range_tail_phase(Sector sector, double m, double omega, double x)
{
    return -sign(sector) * m / (2.0 * omega * std::sqrt(x));
}

PhaseDifferenceResult phase_difference(double m, double omega, const PhaseConfig& cfg)
{
    require_positive(m, omega);
    if (!(cfg.tolerance > 0.0) || cfg.max_doublings < 0) {
        throw Error(ErrorCode::InvalidParams, "phase tolerance must be positive");
    }
    const double x_match = cfg.x_match > 0.0 ? cfg.x_match : kMinOmegaX / omega;
    if (!(cfg.x_max >= x_match)) {
        std::ostringstream os;
        os << "x_max = " << cfg.x_max << " is below the matching point " << x_match;
        throw Error(ErrorCode::InvalidParams, os.str());
    }
    const double eta = coulomb_eta(m, omega);

    // The map divides by i omega; multiplying back by i makes re(Z+) the image
    // of re(Z-) under the real operator (d/dx + W)/omega, so the real parts of
    // the two samples form a partner pair.
    SolutionSample minus = solution_Z(Branch::I, Sector::Minus, x_match, m, omega);
    SolutionSample plus = susy_map(Sector::Minus, minus, m, omega);
    plus.z *= Complex(0.0, 1.0);
    plus.dz *= Complex(0.0, 1.0);

    const PotentialSpec spec_minus{m, Sector::Minus};
    const PotentialSpec spec_plus{m, Sector::Plus};
    auto v_minus = [spec_minus](double x) { return potential(x, spec_minus); };
    auto v_plus = [spec_plus](double x) { return potential(x, spec_plus); };

    PhaseDifferenceResult result;
    int consecutive_within = 0;
    for (int k = 0; k <= cfg.max_doublings; ++k) {
        const double x = x_match * std::ldexp(1.0, k);
        if (x > cfg.x_max) {
            break;
        }
        if (k > 0) {
            const double target[] = {x};
            minus = integrate_to(v_minus, omega, minus, target, cfg.integrator).back();
            plus = integrate_to(v_plus, omega, plus, target, cfg.integrator).back();
        }
        PhaseRow row;
        row.x = x;
        double k_minus = 0.0;
        double k_plus = 0.0;
        if (cfg.local_wavenumber) {
            k_minus = std::sqrt(omega * omega - v_minus(x));
            k_plus = std::sqrt(omega * omega - v_plus(x));
        }
        row.delta_minus = local_phase(minus, omega, eta, cfg.part, k_minus).delta_log_corrected;
        row.delta_plus = local_phase(plus, omega, eta, cfg.part, k_plus).delta_log_corrected;
        double diff = row.delta_plus - row.delta_minus;
        if (cfg.short_range_tail) {
            diff += short_range_tail_phase(Sector::Plus, m, omega, x) - short_range_tail_phase(Sector::Minus, m, omega, x);
        }
        row.diff_mod_pi = mod_pi_nonnegative(diff);
        row.residual = std::abs(row.diff_mod_pi - kPi / 2.0);
        result.x_sequence.push_back(x);
        result.table.push_back(row);

        // Stop once two successive points sit an order of magnitude inside the tolerance.
        consecutive_within = row.residual <= 0.1 * cfg.tolerance ? consecutive_within + 1 : 0;
        if (consecutive_within >= 2 && result.table.size() >= kMinSequencePoints) {
            break;
        }
    }
    const PhaseRow& last = result.table.back();
    result.diff_mod_pi = last.diff_mod_pi;
    result.residual_to_half_pi = last.residual;
    const double first = result.table.front().residual;
    result.converged = result.table.size() >= kMinSequencePoints && last.residual <= cfg.tolerance &&
                       (last.residual <= first || first <= cfg.tolerance);
    return result;
}

double synthetic_superpotential_residual(double w, double omega, double delta_minus)
{
    if (!(omega > 0.0) || !std::isfinite(w)) {
        throw Error(ErrorCode::InvalidParams, "synthetic relation needs omega > 0 and finite w");
    }
    const double x = 2.0 * kMinOmegaX / omega;
    const double theta = omega * x + delta_minus;
    const SolutionSample minus{x, Complex(std::sin(theta), 0.0), Complex(omega * std::cos(theta), 0.0)};
    // (d/dx + w) applied to the free wave; the second derivative -omega^2 u closes it.
    const Complex mapped = minus.dz + w * minus.z;
    const Complex mapped_dz = -omega * omega * minus.z + w * minus.dz;
    const SolutionSample plus{x, mapped, mapped_dz};

    const double d_minus = local_phase(minus, omega, 0.0).delta_raw;
    const double d_plus = local_phase(plus, omega, 0.0).delta_raw;
    const double lhs = 2.0 * (d_minus - d_plus);
    const double rhs = std::arg(Complex(w, -omega) / Complex(w, omega));
    return std::abs(std::remainder(lhs - rhs, 2.0 * kPi));
}

}  // namespace susyces
