#include "susyces/closedform.hpp"

#include <cmath>
#include <sstream>

#include "susyces/error.hpp"

namespace susyces {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_solution_domain(double m, double omega)
{
    if (!(m > 0.0) || !std::isfinite(m) || !(omega > 0.0) || !std::isfinite(omega)) {
        std::ostringstream os;
        os << "solutions need m > 0 and omega > 0 (got m = " << m << ", omega = " << omega << ")";
        throw Error(ErrorCode::InvalidParams, os.str());
    }
}

void require_positive_x(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "x = " << x << " is outside (0, inf)";
        throw Error(ErrorCode::DomainError, os.str());
    }
}

struct RTildePair {
    Complex r1;
    Complex r2;
    Complex dr1;  // d/dx
    Complex dr2;
};

// Pieces shared by both cases at one x.
struct Frame {
    Complex y;
    Complex sy;          // y^{1/2}
    Complex half_decay;  // e^{-y/2}
    Complex dydx;
};

Frame frame_at(double x, double omega)
{
    return {y_of_x(x, omega), sqrt_y_of_x(x, omega), std::exp(Complex(0.0, omega * x)), Complex(0.0, -2.0 * omega)};
}

// e^{-y/2} F and its x-derivative.
std::pair<Complex, Complex> plain_term(const Frame& f, const ChfParams& p, const SeriesConfig& cfg)
{
    const Complex v = chf_1f1(p, f.y, cfg);
    const Complex dv = chf_1f1_deriv(p, f.y, cfg);
    return {f.half_decay * v, f.half_decay * (dv - 0.5 * v) * f.dydx};
}

// e^{-y/2} y^{1/2} G and its x-derivative.
std::pair<Complex, Complex> root_term(const Frame& f, const ChfParams& p, const SeriesConfig& cfg)
{
    const Complex g = chf_1f1(p, f.y, cfg);
    const Complex dg = chf_1f1_deriv(p, f.y, cfg);
    const Complex value = f.half_decay * f.sy * g;
    const Complex dy = f.half_decay * (f.sy * (dg - 0.5 * g) + g / (2.0 * f.sy));
    return {value, dy * f.dydx};
}

RTildePair rtilde_pair(RTildeCase c, double x, double m, double omega, const SeriesConfig& cfg)
{
    require_solution_domain(m, omega);
    require_positive_x(x);
    const SolutionParams sp = solution_params(m, omega);
    const CouplingConstants cc = coupling_constants(m, omega);
    const Frame f = frame_at(x, omega);
    if (c == RTildeCase::A) {
        const auto [r1, dr1] = plain_term(f, {sp.a1, 0.5}, cfg);
        const auto [g, dg] = root_term(f, {sp.a2 + 0.5, 1.5}, cfg);
        return {r1 * cc.c_i1, cc.c_ii2 * g, dr1 * cc.c_i1, cc.c_ii2 * dg};
    }
    const auto [r1, dr1] = root_term(f, {sp.a1 + 0.5, 1.5}, cfg);
    const auto [g, dg] = plain_term(f, {sp.a2, 0.5}, cfg);
    return {r1 * cc.c_i2, cc.c_ii1 * g, dr1 * cc.c_i2, cc.c_ii1 * dg};
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::I ? "I" : "II"; }

Complex y_of_x(double x, double omega)
{
    require_positive_x(x);
    if (!(omega > 0.0)) {
        throw Error(ErrorCode::DomainError, "omega must be positive");
    }
    return {0.0, -2.0 * omega * x};
}

Complex sqrt_y_of_x(double x, double omega)
{
    (void)y_of_x(x, omega);
    return std::sqrt(2.0 * omega * x) * kOverallPhase;
}

SolutionParams solution_params(double m, double omega)
{
    require_solution_domain(m, omega);
    SolutionParams p;
    p.m = m;
    p.omega = omega;
    p.a1 = Complex(0.0, m * m / (2.0 * omega));
    p.a2 = p.a1 + 0.5;
    return p;
}

CouplingConstants coupling_constants(double m, double omega, Complex c_i1, Complex c_i2)
{
    const SolutionParams sp = solution_params(m, omega);
    const double root = std::sqrt(2.0 * omega);
    CouplingConstants cc;
    cc.c_i1 = c_i1;
    cc.c_i2 = c_i2;
    cc.c_ii2 = c_i1 * 2.0 * root * kSqrtI * sp.a1 / m;
    cc.c_ii1 = c_i2 * root * kSqrtI / (2.0 * m);
    return cc;
}

Complex rtilde(Component j, RTildeCase c, double x, double m, double omega, const SeriesConfig& cfg)
{
    const RTildePair r = rtilde_pair(c, x, m, omega, cfg);
    return j == Component::One ? r.r1 : r.r2;
}

Complex rtilde_dx(Component j, RTildeCase c, double x, double m, double omega, const SeriesConfig& cfg)
{
    const RTildePair r = rtilde_pair(c, x, m, omega, cfg);
    return j == Component::One ? r.dr1 : r.dr2;
}

SolutionSample solution_Z(Branch branch, Sector sector, double x, double m, double omega, const SeriesConfig& cfg)
{
    const RTildePair r = rtilde_pair(branch == Branch::I ? RTildeCase::A : RTildeCase::B, x, m, omega, cfg);
    const Complex s = sign(sector) * kI;
    return {x, kOverallPhase * (r.r1 + s * r.r2), kOverallPhase * (r.dr1 + s * r.dr2)};
}

Complex solution_Z_explicit(Branch branch, Sector sector, double x, double m, double omega,
                            const SeriesConfig& cfg)
{
    require_solution_domain(m, omega);
    require_positive_x(x);
    const SolutionParams sp = solution_params(m, omega);
    const Complex y = y_of_x(x, omega);
    const Complex sy = sqrt_y_of_x(x, omega);
    const double root = std::sqrt(2.0 * omega);
    const double pm = sign(sector);
    const Complex lead = kOverallPhase * std::exp(-y / 2.0);
    if (branch == Branch::I) {
        const Complex k = 2.0 * root * kISqrtI * sp.a1 / m;
        return lead * (chf_1f1({sp.a1, 0.5}, y, cfg) + pm * k * sy * chf_1f1({sp.a2 + 0.5, 1.5}, y, cfg));
    }
    const Complex k = root * kISqrtI / (2.0 * m);
    return lead * (sy * chf_1f1({sp.a1 + 0.5, 1.5}, y, cfg) + pm * k * chf_1f1({sp.a2, 0.5}, y, cfg));
}

Complex wronskian_Z(Sector sector, double m, double omega)
{
    require_solution_domain(m, omega);
    return -sign(sector) * omega * kISqrtI * std::sqrt(2.0 * omega) / m;
}

Complex hermite_lambda(Component j, double m, double omega)
{
    require_solution_domain(m, omega);
    const double eps = j == Component::One ? 1.0 : -1.0;
    // -(1 - eps + 2 i m^2/omega), with m^2/omega formed as 2 * (m^2 / (2 omega))
    // so that it rounds the same way as a_j.
    const double ratio = 2.0 * (m * m / (2.0 * omega));
    return {-(1.0 - eps), -2.0 * ratio};
}

SolutionSample susy_map(Sector from, const SolutionSample& sample, double m, double omega)
{
    if (!(omega > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "susy_map needs omega > 0");
    }
    const double w = superpotential(sample.x, m);
    const double target = sign(partner(from));
    const Complex i_omega(0.0, omega);
    SolutionSample out;
    out.x = sample.x;
    out.z = (sample.dz + target * w * sample.z) / i_omega;
    out.dz = i_omega * sample.z + target * w * out.z;
    return out;
}

Complex sample_wronskian(const SolutionSample& first, const SolutionSample& second)
{
    return first.z * second.dz - second.z * first.dz;
}

}  // namespace susyces
