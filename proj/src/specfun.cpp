#include "susyces/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "susyces/ddouble.hpp"
#include "susyces/error.hpp"

namespace susyces {

namespace {

// Termination level for the internal double-double sums that seed and carry
// the continuation; well below binary64 resolution.
constexpr double kInternalTol = 1e-26;
constexpr double kContinuationStep = 2.0;

bool is_nonpositive_integer(double v) { return v <= 0.0 && std::floor(v) == v; }

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void validate(const ChfParams& p, Complex z)
{
    if (!std::isfinite(p.b) || is_nonpositive_integer(p.b)) {
        std::ostringstream os;
        os << "b = " << p.b << " is not admissible for 1F1";
        throw Error(ErrorCode::InvalidParams, os.str());
    }
    if (!finite(p.a) || !finite(z)) {
        throw Error(ErrorCode::InvalidParams, "non-finite argument to 1F1");
    }
}

DDComplex inverse(const DDComplex& z)
{
    const DDouble norm = z.re * z.re + z.im * z.im;
    return {z.re / norm, -z.im / norm};
}

// Power series sum_{k} (a)_k / ((b)_k k!) z^k in double-double. Stops once two
// consecutive terms fall below tol * |partial sum|.
DDComplex series_dd(Complex a, double b, const DDComplex& z, double tol, int max_terms)
{
    DDComplex term(DDouble(1.0));
    DDComplex sum(DDouble(1.0));
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        const DDComplex num = DDComplex(a) + DDComplex(DDouble(static_cast<double>(k)));
        const DDouble den = (DDouble(b) + DDouble(static_cast<double>(k))) * DDouble(static_cast<double>(k + 1));
        term = (term * num) * z / den;
        sum += term;
        if (abs(term) <= tol * abs(sum)) {
            if (++small_run >= 2) {
                return sum;
            }
        } else {
            small_run = 0;
        }
    }
    std::ostringstream os;
    os << "1F1 series did not converge in " << max_terms << " terms (|z| = " << abs(z) << ")";
    throw Error(ErrorCode::NonConvergence, os.str());
}

struct ValueAndSlope {
    DDComplex f;
    DDComplex df;
};

// One Taylor step of the confluent hypergeometric equation
//   z F'' + (b - z) F' - a F = 0
// from centre zc to zc + h. With d_n = c_n h^n the coefficient recurrence is
//   d_{n+2} = [(n + a) h^2 d_n - (n+1)(n + b - zc) h d_{n+1}] / (zc (n+1)(n+2)).
// The radius of convergence is |zc|; callers keep |h| <= |zc| / 6.
ValueAndSlope taylor_step(Complex a, double b, const DDComplex& zc, const DDComplex& h, const ValueAndSlope& at,
                          int max_terms)
{
    const DDComplex inv_zc = inverse(zc);
    const DDComplex h2 = h * h;
    const DDComplex b_minus_zc = DDComplex(DDouble(b)) - zc;

    DDComplex d_prev = at.f;
    DDComplex d_cur = at.df * h;
    DDComplex f = d_prev + d_cur;
    DDComplex slope_h = d_cur;  // sum n d_n, divided by h at the end
    int small_run = 0;
    for (int n = 0; n < max_terms; ++n) {
        const DDouble n1(static_cast<double>(n + 1));
        const DDouble n2(static_cast<double>(n + 2));
        const DDComplex coef_prev = (DDComplex(a) + DDComplex(DDouble(static_cast<double>(n)))) * h2;
        const DDComplex coef_cur = (b_minus_zc + DDComplex(DDouble(static_cast<double>(n)))) * h * n1;
        const DDComplex d_next = (coef_prev * d_prev - coef_cur * d_cur) * inv_zc / (n1 * n2);
        f += d_next;
        slope_h += d_next * n2;
        d_prev = d_cur;
        d_cur = d_next;
        const double scale = abs(f) + abs(slope_h);
        if (abs(d_next) * static_cast<double>(n + 2) <= kInternalTol * scale) {
            if (++small_run >= 2) {
                const DDComplex inv_h = inverse(h);
                return {f, slope_h * inv_h};
            }
        } else {
            small_run = 0;
        }
    }
    throw Error(ErrorCode::NonConvergence, "Taylor continuation step did not converge");
}

// Evaluates 1F1 outside the direct-series disc: seed value and slope on the
// circle |z| = r0, then march radially outward in equal steps.
Complex continue_along_ray(Complex a, double b, Complex z, const SeriesConfig& cfg)
{
    const double r = std::abs(z);
    const double r0 = cfg.series_radius;
    const int steps = static_cast<int>(std::ceil((r - r0) / kContinuationStep));
    const DDComplex zdd(z);

    // Positions z * s_j with s_0 = r0/r and s_steps = 1 exactly.
    auto position = [&](int j) {
        if (j == steps) {
            return zdd;
        }
        const double s = (r0 + (r - r0) * static_cast<double>(j) / steps) / r;
        return zdd * DDouble(s);
    };

    DDComplex zc = position(0);
    ValueAndSlope state;
    state.f = series_dd(a, b, zc, kInternalTol, cfg.max_terms);
    const Complex ratio = a / b;
    state.df = series_dd(a + 1.0, b + 1.0, zc, kInternalTol, cfg.max_terms) * DDComplex(ratio);

    for (int j = 1; j <= steps; ++j) {
        const DDComplex next = position(j);
        state = taylor_step(a, b, zc, next - zc, state, cfg.max_terms);
        zc = next;
    }
    return state.f.to_complex();
}

Complex core(Complex a, double b, Complex z, const SeriesConfig& cfg)
{
    if (std::abs(z) <= cfg.series_radius) {
        return series_dd(a, b, DDComplex(z), cfg.rel_tol, cfg.max_terms).to_complex();
    }
    return continue_along_ray(a, b, z, cfg);
}

}  // namespace

Complex chf_1f1(const ChfParams& p, Complex z, const SeriesConfig& cfg)
{
    validate(p, z);
    if (std::abs(z) > cfg.max_abs_z) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " exceeds the series viability bound " << cfg.max_abs_z;
        throw Error(ErrorCode::SeriesRangeExceeded, os.str());
    }
    if (z.real() < cfg.kummer_threshold) {
        return std::exp(z) * core(p.b - p.a, p.b, -z, cfg);
    }
    return core(p.a, p.b, z, cfg);
}

Complex chf_1f1_deriv(const ChfParams& p, Complex z, const SeriesConfig& cfg)
{
    validate(p, z);
    if (p.a == Complex(0.0, 0.0)) {
        return {0.0, 0.0};
    }
    return (p.a / p.b) * chf_1f1({p.a + 1.0, p.b + 1.0}, z, cfg);
}

Complex kummer_transform(const ChfParams& p, Complex z, const SeriesConfig& cfg)
{
    validate(p, z);
    SeriesConfig inner = cfg;
    inner.kummer_threshold = -std::numeric_limits<double>::infinity();
    return std::exp(z) * chf_1f1({p.b - p.a, p.b}, -z, inner);
}

Complex chf_1f1_series(const ChfParams& p, Complex z, const SeriesConfig& cfg)
{
    validate(p, z);
    return series_dd(p.a, p.b, DDComplex(z), cfg.rel_tol, cfg.max_terms).to_complex();
}

Complex principal_pow(Complex z, Complex p)
{
    if (z == Complex(0.0, 0.0)) {
        return p == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    }
    if (z.imag() == 0.0) {
        z = {z.real(), 0.0};  // -0.0 would select arg = -pi
    }
    return std::exp(p * std::log(z));
}

Complex log_gamma(Complex z)
{
    if (!finite(z)) {
        throw Error(ErrorCode::DomainError, "log_gamma of a non-finite argument");
    }
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
        std::ostringstream os;
        os << "Gamma has a pole at z = " << z.real();
        throw Error(ErrorCode::PoleAtNonPositiveInteger, os.str());
    }
    if (z.imag() == 0.0) {
        z = {z.real(), 0.0};
    }

    // Upward recurrence log Gamma(z) = log Gamma(z+n) - sum log(z+k) keeps the
    // principal branch; Stirling is then applied where re(w) >= 15.
    Complex shift_logs(0.0, 0.0);
    Complex w = z;
    while (w.real() < 15.0) {
        shift_logs += std::log(w);
        w += 1.0;
    }

    // B_{2k} / (2k (2k-1)) for k = 1..10
    static constexpr std::array<double, 10> kStirling = {
        1.0 / 12.0,         -1.0 / 360.0,          1.0 / 1260.0,         -1.0 / 1680.0,
        1.0 / 1188.0,       -691.0 / 360360.0,     1.0 / 156.0,          -3617.0 / 122400.0,
        43867.0 / 244188.0, -174611.0 / 125400.0,
    };
    const Complex inv_w = 1.0 / w;
    const Complex inv_w2 = inv_w * inv_w;
    Complex corr(0.0, 0.0);
    Complex pw = inv_w;
    for (double c : kStirling) {
        corr += c * pw;
        pw *= inv_w2;
    }
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (w - 0.5) * std::log(w) - w + half_log_2pi + corr - shift_logs;
}

Complex rgamma(Complex z)
{
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
        return {0.0, 0.0};
    }
    return std::exp(-log_gamma(z));
}

namespace {

struct TruncatedSum {
    Complex sum;
    double first_omitted = 0.0;
};

// sum_s (p)_s (q)_s / s! * w^s, stopped at the smallest term.
TruncatedSum optimally_truncated(Complex p, Complex q, Complex w)
{
    TruncatedSum out{Complex(1.0, 0.0), 0.0};
    Complex term(1.0, 0.0);
    double last = 1.0;
    for (int s = 0; s < 1000; ++s) {
        const Complex next = term * (p + double(s)) * (q + double(s)) / double(s + 1) * w;
        const double mag = std::abs(next);
        if (mag == 0.0) {
            out.first_omitted = 0.0;
            return out;
        }
        if (mag >= last) {
            out.first_omitted = mag;
            return out;
        }
        out.sum += next;
        term = next;
        last = mag;
        if (mag <= 1e-17 * std::abs(out.sum)) {
            out.first_omitted = mag;
            return out;
        }
    }
    out.first_omitted = last;
    return out;
}

}  // namespace

AsymptoticValue chf_asymptotic(const ChfParams& p, Complex z)
{
    validate(p, z);
    if (std::abs(z) < kAsymptoticMinAbsZ) {
        std::ostringstream os;
        os << "|z| = " << std::abs(z) << " is below " << kAsymptoticMinAbsZ;
        throw Error(ErrorCode::ArgumentTooSmall, os.str());
    }
    const Complex a = p.a;
    const double b = p.b;
    const Complex gamma_b = std::exp(log_gamma(Complex(b, 0.0)));
    const double sgn = z.imag() < 0.0 ? -1.0 : 1.0;
    const Complex i_pi(0.0, std::numbers::pi);

    AsymptoticValue out{Complex(0.0, 0.0), 0.0};

    const Complex r1 = rgamma(b - a);
    if (r1 != Complex(0.0, 0.0)) {
        const Complex pref = std::exp(sgn * i_pi * a) * principal_pow(z, -a) * r1;
        const TruncatedSum s = optimally_truncated(a, a - b + 1.0, -1.0 / z);
        out.value += pref * s.sum;
        out.error_estimate += std::abs(pref) * s.first_omitted;
    }
    const Complex r2 = rgamma(a);
    if (r2 != Complex(0.0, 0.0)) {
        const Complex pref = std::exp(z) * principal_pow(z, a - b) * r2;
        const TruncatedSum s = optimally_truncated(1.0 - a, b - a, 1.0 / z);
        out.value += pref * s.sum;
        out.error_estimate += std::abs(pref) * s.first_omitted;
    }
    out.value *= gamma_b;
    out.error_estimate *= std::abs(gamma_b);
    return out;
}

}  // namespace susyces
