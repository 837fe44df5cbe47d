#include "susyces/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "susyces/error.hpp"

namespace susyces {

namespace {

using State = std::array<Complex, 2>;  // (Z, dZ/dx)

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Continuous extension (quartic Hermite-type interpolant of the pair).
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kMaxGrow = 5.0;
constexpr double kMaxShrink = 0.1;

State combine(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms)
{
    State out = y;
    for (const auto& [coef, k] : terms) {
        out[0] += h * coef * (*k)[0];
        out[1] += h * coef * (*k)[1];
    }
    return out;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double integration_floor(double m) { return 1e-3 / (m * m); }

std::vector<SolutionSample> integrate_to(const PotentialFn& v, double omega, const SolutionSample& init,
                                         std::span<const double> x_out, const IntegratorConfig& cfg,
                                         IntegrationStats* stats)
{
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_steps < 1) {
        throw Error(ErrorCode::InvalidParams, "integrator tolerances must be positive");
    }
    if (!finite(init.z) || !finite(init.dz) || !std::isfinite(init.x)) {
        throw Error(ErrorCode::InvalidParams, "initial sample is not finite");
    }
    std::vector<SolutionSample> out;
    if (x_out.empty()) {
        return out;
    }
    const double x_end = x_out.back();
    if (x_end == init.x) {
        throw Error(ErrorCode::InvalidParams, "x_end equals x_start");
    }
    const double dir = x_end > init.x ? 1.0 : -1.0;
    for (std::size_t i = 0; i < x_out.size(); ++i) {
        const double prev = i == 0 ? init.x : x_out[i - 1];
        if ((x_out[i] - prev) * dir < 0.0) {
            throw Error(ErrorCode::InvalidParams, "output points must be monotone along the integration");
        }
    }
    out.reserve(x_out.size());

    const double omega2 = omega * omega;
    auto rhs = [&](double x, const State& s) { return State{s[1], (v(x) - omega2) * s[0]}; };
    auto scale = [&](Complex a, Complex b) { return cfg.abs_tol + cfg.rel_tol * std::max(std::abs(a), std::abs(b)); };

    double x = init.x;
    State y{init.z, init.dz};
    State k1 = rhs(x, y);
    std::size_t next_out = 0;
    while (next_out < x_out.size() && x_out[next_out] == x) {
        out.push_back({x, y[0], y[1]});
        ++next_out;
    }

    // Initial step from the local oscillation / growth rate.
    const double rate = std::sqrt(std::abs(v(x) - omega2)) + omega;
    double h = dir * std::min(std::abs(x_end - x), 0.01 / rate);
    double facold = 1e-4;
    long steps = 0;
    long rejected = 0;

    while (next_out < x_out.size()) {
        if (++steps > cfg.max_steps) {
            throw Error(ErrorCode::MaxStepsExceeded, "integrator exceeded max_steps");
        }
        bool last = false;
        if ((x + h - x_end) * dir >= 0.0) {
            h = x_end - x;
            last = true;
        }
        if (std::abs(h) < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
            std::ostringstream os;
            os << "step size underflow at x = " << x;
            throw Error(ErrorCode::StepSizeUnderflow, os.str());
        }

        const State k2 = rhs(x + c2 * h, combine(y, h, {{a21, &k1}}));
        const State k3 = rhs(x + c3 * h, combine(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(x + c4 * h, combine(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(x + c5 * h, combine(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 =
            rhs(x + h, combine(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State y_new = combine(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const double x_new = last ? x_end : x + h;
        const State k7 = rhs(x_new, y_new);

        double err2 = 0.0;
        for (int c = 0; c < 2; ++c) {
            const Complex e = h * (e1 * k1[c] + e3 * k3[c] + e4 * k4[c] + e5 * k5[c] + e6 * k6[c] + e7 * k7[c]);
            const double r = std::abs(e) / scale(y[c], y_new[c]);
            err2 += r * r;
        }
        const double err = std::sqrt(err2 / 2.0);
        if (!std::isfinite(err)) {
            h *= kMaxShrink;
            ++rejected;
            continue;
        }

        const double fac11 = std::pow(err, kExpo);
        if (err <= 1.0) {
            double fac = fac11 / std::pow(facold, kBeta);
            fac = std::clamp(fac / kSafety, 1.0 / kMaxGrow, 1.0 / kMaxShrink);
            facold = std::max(err, 1e-4);

            // Dense output for every requested point inside (x, x_new].
            std::array<State, 5> rc{};
            bool rc_ready = false;
            while (next_out < x_out.size() && (x_out[next_out] - x_new) * dir <= 0.0) {
                const double xo = x_out[next_out];
                if (xo == x_new) {
                    out.push_back({xo, y_new[0], y_new[1]});
                } else {
                    if (!rc_ready) {
                        for (int c = 0; c < 2; ++c) {
                            const Complex ydiff = y_new[c] - y[c];
                            const Complex bspl = h * k1[c] - ydiff;
                            rc[0][c] = y[c];
                            rc[1][c] = ydiff;
                            rc[2][c] = bspl;
                            rc[3][c] = ydiff - h * k7[c] - bspl;
                            rc[4][c] = h * (d1 * k1[c] + d3 * k3[c] + d4 * k4[c] + d5 * k5[c] + d6 * k6[c] +
                                            d7 * k7[c]);
                        }
                        rc_ready = true;
                    }
                    const double th = (xo - x) / h;
                    const double th1 = 1.0 - th;
                    Complex val[2];
                    for (int c = 0; c < 2; ++c) {
                        val[c] = rc[0][c] + th * (rc[1][c] + th1 * (rc[2][c] + th * (rc[3][c] + th1 * rc[4][c])));
                    }
                    out.push_back({xo, val[0], val[1]});
                }
                ++next_out;
            }

            x = x_new;
            y = y_new;
            k1 = k7;
            h = h / fac;
        } else {
            ++rejected;
            h = h / std::min(1.0 / kMaxShrink, fac11 / kSafety);
        }
    }
    if (stats != nullptr) {
        stats->accepted = steps - rejected;
        stats->rejected = rejected;
    }
    return out;
}

std::vector<SolutionSample> integrate(const ODEProblem& problem, const IntegratorConfig& cfg, IntegrationStats* stats)
{
    const double m = problem.spec.m;
    if (m == 0.0 || !std::isfinite(m) || !(problem.omega > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "ODE problem needs m != 0 and omega > 0");
    }
    if (problem.x_start == problem.x_end) {
        throw Error(ErrorCode::InvalidParams, "x_end equals x_start");
    }
    const double lo = std::min(problem.x_start, problem.x_end);
    if (!(lo >= integration_floor(m))) {
        std::ostringstream os;
        os << "interval reaches x = " << lo << ", below the integration floor " << integration_floor(m);
        throw Error(ErrorCode::DomainError, os.str());
    }
    if (cfg.dense_points < 2) {
        throw Error(ErrorCode::InvalidParams, "dense_points must be at least 2");
    }
    std::vector<double> xs(static_cast<std::size_t>(cfg.dense_points));
    const double span = problem.x_end - problem.x_start;
    for (int i = 0; i < cfg.dense_points; ++i) {
        xs[static_cast<std::size_t>(i)] = problem.x_start + span * static_cast<double>(i) / (cfg.dense_points - 1);
    }
    xs.back() = problem.x_end;
    SolutionSample init = problem.init;
    init.x = problem.x_start;
    const PotentialSpec spec = problem.spec;
    return integrate_to([spec](double x) { return potential(x, spec); }, problem.omega, init, xs, cfg, stats);
}

// ---------------------------------------------------------------------------

FrobeniusSeries::FrobeniusSeries(Component j, FrobeniusExponent exponent, double m, double omega,
                                 double y_magnitude_max)
{
    if (!(m > 0.0) || !(omega > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "Frobenius series needs m > 0 and omega > 0");
    }
    if (!(y_magnitude_max > 0.0) || !std::isfinite(y_magnitude_max)) {
        throw Error(ErrorCode::InvalidParams, "y_magnitude_max must be positive");
    }
    const double eps = j == Component::One ? 1.0 : -1.0;
    a_ = Complex((1.0 - eps) / 4.0, m * m / (2.0 * omega));
    sigma_ = exponent == FrobeniusExponent::Zero ? 0.0 : 0.5;
    radius_ = y_magnitude_max;

    // (k + 1 + sigma)(k + sigma + 1/2) c_{k+1} = (k + sigma + A) c_k
    constexpr std::size_t kMaxTerms = 100000;
    constexpr double kTail = 1e-34;
    coeffs_.emplace_back(DDouble(1.0));
    double max_bound = 1.0;
    double r_pow = 1.0;
    int small_run = 0;
    for (std::size_t k = 0; k < kMaxTerms; ++k) {
        const double kd = static_cast<double>(k);
        const DDComplex num = DDComplex(a_) + DDComplex(DDouble(kd) + DDouble(sigma_));
        const DDouble den = (DDouble(kd + 1.0) + DDouble(sigma_)) * (DDouble(kd) + DDouble(sigma_ + 0.5));
        coeffs_.push_back(coeffs_.back() * num / den);
        r_pow *= radius_;
        const double bound = abs(coeffs_.back()) * r_pow;
        max_bound = std::max(max_bound, bound);
        if (max_bound > 1e18) {
            std::ostringstream os;
            os << "|y| up to " << radius_ << " loses more digits than double-double carries";
            throw Error(ErrorCode::NonConvergence, os.str());
        }
        if (kd > radius_ && bound <= kTail * max_bound) {
            if (++small_run >= 2) {
                return;
            }
        } else {
            small_run = 0;
        }
    }
    throw Error(ErrorCode::NonConvergence, "Frobenius coefficient table did not converge");
}

Complex FrobeniusSeries::evaluate(Complex y) const
{
    if (std::abs(y) > radius_ * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "|y| = " << std::abs(y) << " exceeds the table radius " << radius_;
        throw Error(ErrorCode::DomainError, os.str());
    }
    const DDComplex ydd(y);
    DDComplex power(DDouble(1.0));
    DDComplex sum;
    for (const auto& c : coeffs_) {
        sum += c * power;
        power = power * ydd;
    }
    Complex value = sum.to_complex();
    if (sigma_ != 0.0) {
        value *= std::sqrt(y);
    }
    return value;
}

FrobeniusSeries frobenius_series_solution(Component j, FrobeniusExponent exponent, double m, double omega,
                                          double y_magnitude_max)
{
    return {j, exponent, m, omega, y_magnitude_max};
}

Complex frobenius_solution_Z(Branch branch, Sector sector, double x, double m, double omega)
{
    const Complex y(0.0, -2.0 * omega * x);
    const double r = std::abs(y);
    const CouplingConstants cc = coupling_constants(m, omega);
    const Complex decay = std::exp(-y / 2.0);
    Complex r1;
    Complex r2;
    if (branch == Branch::I) {
        r1 = cc.c_i1 * decay * FrobeniusSeries(Component::One, FrobeniusExponent::Zero, m, omega, r).evaluate(y);
        r2 = cc.c_ii2 * decay * FrobeniusSeries(Component::Two, FrobeniusExponent::Half, m, omega, r).evaluate(y);
    } else {
        r1 = cc.c_i2 * decay * FrobeniusSeries(Component::One, FrobeniusExponent::Half, m, omega, r).evaluate(y);
        r2 = cc.c_ii1 * decay * FrobeniusSeries(Component::Two, FrobeniusExponent::Zero, m, omega, r).evaluate(y);
    }
    return kOverallPhase * (r1 + sign(sector) * Complex(0.0, 1.0) * r2);
}

// ---------------------------------------------------------------------------

CheckReport residual_schrodinger(std::span<const SolutionSample> samples, const PotentialFn& v, double omega,
                                 double tolerance, std::string name)
{
    if (samples.size() < 5) {
        throw Error(ErrorCode::GridTooCoarse, "five-point residual needs at least 5 samples");
    }
    const double h = samples[1].x - samples[0].x;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double step = samples[i].x - samples[i - 1].x;
        if (!(std::abs(step - h) <= 1e-6 * std::abs(h)) || h == 0.0) {
            throw Error(ErrorCode::GridTooCoarse, "residual samples are not on a uniform grid");
        }
    }
    const double omega2 = omega * omega;
    double worst = 0.0;
    double worst_x = samples[2].x;
    for (std::size_t i = 2; i + 2 < samples.size(); ++i) {
        const Complex d2 = (-samples[i - 2].z + 16.0 * samples[i - 1].z - 30.0 * samples[i].z +
                            16.0 * samples[i + 1].z - samples[i + 2].z) /
                           (12.0 * h * h);
        const double vx = v(samples[i].x);
        const Complex res = d2 + (omega2 - vx) * samples[i].z;
        const double rel = std::abs(res) / (std::max(1.0, std::abs(samples[i].z)) * omega2);
        if (!(rel <= worst)) {
            worst = rel;
            worst_x = samples[i].x;
        }
    }
    std::ostringstream os;
    os << samples.size() << " samples, h = " << h << ", worst at x = " << worst_x;
    return make_report(std::move(name), worst, tolerance, os.str());
}

CheckReport residual_schrodinger(std::span<const SolutionSample> samples, const PotentialSpec& spec, double omega,
                                 double tolerance, std::string name)
{
    return residual_schrodinger(
        samples, [spec](double x) { return potential(x, spec); }, omega, tolerance, std::move(name));
}

std::vector<SolutionSample> propagate_to_asymptotic(Branch branch, Sector sector, double m, double omega,
                                                    double x_match, double x_far, const IntegratorConfig& cfg)
{
    if (!(x_far > x_match)) {
        throw Error(ErrorCode::InvalidParams, "x_far must exceed x_match");
    }
    ODEProblem problem;
    problem.spec = {m, sector};
    problem.omega = omega;
    problem.x_start = x_match;
    problem.x_end = x_far;
    problem.init = solution_Z(branch, sector, x_match, m, omega);
    return integrate(problem, cfg);
}

}  // namespace susyces
