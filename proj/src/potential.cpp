#include "susyces/potential.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

#include "susyces/error.hpp"

namespace susyces {

namespace {

void require_positive_x(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "x = " << x << " is outside (0, inf)";
        throw Error(ErrorCode::DomainError, os.str());
    }
}

// x^{-3/2} as 1/(x sqrt x), shared by every formula so that the two
// evaluation routes round identically wherever possible.
double inv_x32(double x) { return 1.0 / (x * std::sqrt(x)); }

}  // namespace

std::string_view to_string(Sector s) { return s == Sector::Plus ? "plus" : "minus"; }

double superpotential(double x, double m)
{
    require_positive_x(x);
    return -m / std::sqrt(x);
}

double superpotential_derivative(double x, double m)
{
    require_positive_x(x);
    return 0.5 * m * inv_x32(x);
}

double potential_factorized(double x, const PotentialSpec& spec)
{
    const double w = superpotential(x, spec.m);
    const double dw = superpotential_derivative(x, spec.m);
    return w * w + sign(spec.sector) * dw;
}

double potential(double x, const PotentialSpec& spec)
{
    require_positive_x(x);
    const double m = spec.m;
    const double tail = 0.5 * m * inv_x32(x);
    const double v = m * m / x + (spec.sector == Sector::Plus ? tail : -tail);
#ifndef NDEBUG
    assert(ulps_of(v, potential_factorized(x, spec), potential_term_scale(x, m)) <= 4.0);
#endif
    return v;
}

double potential_derivative(double x, const PotentialSpec& spec)
{
    require_positive_x(x);
    const double m = spec.m;
    return -(m / (x * x)) * (m + sign(spec.sector) * 0.75 / std::sqrt(x));
}

CriticalStructure critical_structure(double m)
{
    if (m == 0.0 || !std::isfinite(m)) {
        throw Error(ErrorCode::InvalidParams, "critical structure needs m != 0");
    }
    const double m2 = m * m;
    return {1.0 / (4.0 * m2), 9.0 / (16.0 * m2), 0.0};
}

double ces_residual(double m)
{
    const double half = 0.5 * m;
    return -0.25 * (m * m) + half * half;
}

double shape_invariance_gap(double x, double m)
{
    return potential(x, {m, Sector::Plus}) - potential(x, {-m, Sector::Minus});
}

double potential_term_scale(double x, double m)
{
    require_positive_x(x);
    return std::abs(m * m / x) + std::abs(0.5 * m * inv_x32(x));
}

double ulps_of(double a, double b, double scale)
{
    const double s = std::abs(scale);
    const double ulp = std::nextafter(s, std::numeric_limits<double>::infinity()) - s;
    return std::abs(a - b) / ulp;
}

}  // namespace susyces
