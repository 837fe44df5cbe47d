#include "susyces/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "susyces/error.hpp"
#include "susyces/oracle.hpp"
#include "susyces/scattering.hpp"
#include "susyces/table.hpp"

#ifndef SUSY_CES_GOLDEN_DIR_DEFAULT
#define SUSY_CES_GOLDEN_DIR_DEFAULT "golden"
#endif

namespace susyces {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kI(0.0, 1.0);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// Relative to max(1, |want|), the comparison used by every solution-level check.
double rel1(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

std::string params_label(double m, double omega) { return "(m=" + fmt(m) + ", omega=" + fmt(omega) + ")"; }

// Tracks the worst value and where it happened.
struct Worst {
    double value = 0.0;
    std::string where;
    void update(double v, const std::string& at)
    {
        if (!(v <= value)) {  // NaN propagates as the worst case
            value = std::isnan(v) ? kInf : v;
            where = at;
        }
    }
};

std::vector<double> log_grid(double a, double b, int n) { return make_grid(a, b, n, Spacing::Log); }

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path, std::size_t columns)
{
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorCode::InvalidParams, "cannot read golden table " + path.string());
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool header = true;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        auto cells = split_csv_line(line);
        if (cells.size() != columns) {
            throw Error(ErrorCode::InvalidParams, "malformed row in " + path.string() + ": " + line);
        }
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) {
        throw Error(ErrorCode::InvalidParams, "golden table " + path.string() + " has no rows");
    }
    return rows;
}

double to_double(const std::string& s)
{
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw Error(ErrorCode::InvalidParams, "bad number in golden table: " + s);
    }
    return v;
}

}  // namespace

std::filesystem::path golden_dir()
{
    if (const char* env = std::getenv("SUSY_CES_GOLDEN_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return SUSY_CES_GOLDEN_DIR_DEFAULT;
}

std::vector<GoldenChfRow> load_golden_chf(const std::filesystem::path& dir)
{
    std::vector<GoldenChfRow> out;
    for (const auto& c : read_csv(dir / "chf.csv", 7)) {
        out.push_back({{to_double(c[0]), to_double(c[1])},
                       to_double(c[2]),
                       {to_double(c[3]), to_double(c[4])},
                       {to_double(c[5]), to_double(c[6])}});
    }
    return out;
}

std::vector<std::pair<std::string, Complex>> load_golden_values(const std::filesystem::path& dir)
{
    std::vector<std::pair<std::string, Complex>> out;
    for (const auto& c : read_csv(dir / "values.csv", 3)) {
        out.emplace_back(c[0], Complex(to_double(c[1]), to_double(c[2])));
    }
    return out;
}

Complex golden_value(const std::filesystem::path& dir, std::string_view name)
{
    for (const auto& [n, v] : load_golden_values(dir)) {
        if (n == name) {
            return v;
        }
    }
    throw Error(ErrorCode::InvalidParams, "golden value '" + std::string(name) + "' not found");
}

namespace checks {

// ---------------------------------------------------------------- specfun

CheckReport chf_golden(const std::filesystem::path& dir)
{
    Worst w;
    const auto rows = load_golden_chf(dir);
    for (const auto& r : rows) {
        w.update(rel(chf_1f1({r.a, r.b}, r.z), r.f), "a=" + fmt(r.a.real()) + "+" + fmt(r.a.imag()) +
                                                          "i z=" + fmt(r.z.real()) + "+" + fmt(r.z.imag()) + "i");
    }
    return make_report("specfun.golden_table", w.value, 1e-12,
                       std::to_string(rows.size()) + " rows; worst at " + w.where);
}

namespace {

struct ChfPoint {
    Complex a;
    double b;
    Complex z;
};

std::vector<ChfPoint> random_chf_points(int n, double a_max, double z_max, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<ChfPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double ra = a_max * std::sqrt(unit(rng));
        const double rz = z_max * std::sqrt(unit(rng));
        const double ta = 2.0 * kPi * unit(rng);
        const double tz = 2.0 * kPi * unit(rng);
        pts.push_back({std::polar(ra, ta), i % 2 == 0 ? 0.5 : 1.5, std::polar(rz, tz)});
    }
    return pts;
}

std::string point_label(const ChfPoint& p)
{
    return "a=" + fmt(p.a.real()) + "+" + fmt(p.a.imag()) + "i b=" + fmt(p.b) + " z=" + fmt(p.z.real()) + "+" +
           fmt(p.z.imag()) + "i";
}

}  // namespace

CheckReport chf_kummer_identity()
{
    SeriesConfig direct;
    direct.kummer_threshold = -kInf;
    Worst w;
    for (const auto& p : random_chf_points(200, 5.0, 20.0, 11)) {
        const Complex f = chf_1f1({p.a, p.b}, p.z, direct);
        const Complex k = kummer_transform({p.a, p.b}, p.z);
        w.update(std::abs(f - k) / (1.0 + std::abs(f)), point_label(p));
    }
    return make_report("specfun.kummer_identity", w.value, 1e-10,
                       "|F - e^z F(b-a,b;-z)| / (1+|F|), 200 random points, |a|<=5, |z|<=20; worst at " + w.where);
}

CheckReport chf_derivative_fd()
{
    const double h = 1e-5;
    Worst w;
    for (const auto& p : random_chf_points(100, 3.0, 15.0, 12)) {
        const Complex d = chf_1f1_deriv({p.a, p.b}, p.z);
        const Complex fd = (chf_1f1({p.a, p.b}, p.z + h) - chf_1f1({p.a, p.b}, p.z - h)) / (2.0 * h);
        w.update(std::abs(d - fd) / std::max(1.0, std::abs(d)), point_label(p));
    }
    return make_report("specfun.derivative_fd", w.value, 1e-7,
                       "analytic derivative vs central difference, h=1e-5; worst at " + w.where);
}

CheckReport chf_wronskian()
{
    const double b = 0.5;
    Worst w;
    for (auto p : random_chf_points(100, 3.0, 15.0, 13)) {
        p.b = b;
        const Complex f = chf_1f1({p.a, b}, p.z);
        const Complex df = chf_1f1_deriv({p.a, b}, p.z);
        const Complex a2 = p.a - b + 1.0;
        const Complex g = chf_1f1({a2, 2.0 - b}, p.z);
        const Complex dg = chf_1f1_deriv({a2, 2.0 - b}, p.z);
        const Complex zp = principal_pow(p.z, 1.0 - b);
        const Complex zm = principal_pow(p.z, -b);
        const Complex second = zp * g;
        const Complex dsecond = (1.0 - b) * zm * g + zp * dg;
        const Complex wr = f * dsecond - second * df;
        const Complex want = (1.0 - b) * zm * std::exp(p.z);
        // Scale by the size of the products that cancel.
        const double scale = std::max({std::abs(f * dsecond), std::abs(second * df), std::abs(want)});
        w.update(std::abs(wr - want) / scale, point_label(p));
    }
    return make_report("specfun.chf_wronskian", w.value, 1e-9,
                       "W_z[F(a,1/2;z), z^{1/2} F(a+1/2,3/2;z)] = (1/2) z^{-1/2} e^z, 100 points; worst at " +
                           w.where);
}

CheckReport chf_contiguous()
{
    Worst w;
    for (const auto& p : random_chf_points(100, 4.0, 15.0, 14)) {
        const Complex f = chf_1f1({p.a, p.b}, p.z);
        const Complex fm = chf_1f1({p.a - 1.0, p.b}, p.z);
        const Complex g = chf_1f1({p.a, p.b + 1.0}, p.z);
        const Complex lhs = f - fm;
        const Complex rhs = p.z / p.b * g;
        const double scale = std::max({1.0, std::abs(f), std::abs(fm)});
        w.update(std::abs(lhs - rhs) / scale, point_label(p));
    }
    return make_report("specfun.contiguous", w.value, 1e-10,
                       "F(a,b) - F(a-1,b) = (z/b) F(a,b+1), relative to max(1,|F|); worst at " + w.where);
}

CheckReport chf_asymptotic_exact()
{
    Worst w;
    w.update(rel(chf_asymptotic({1.0, 1.0}, 50.0).value, std::exp(50.0)), "(1,1;50)");
    w.update(rel(chf_asymptotic({0.0, 0.5}, Complex(0.0, 40.0)).value, 1.0), "(0,1/2;40i)");
    w.update(rel(chf_asymptotic({0.5, 0.5}, Complex(0.0, -30.0)).value, std::exp(Complex(0.0, -30.0))),
             "(1/2,1/2;-30i)");
    return make_report("specfun.asymptotic_exact", w.value, 1e-10,
                       "asymptotic expansion on exact identities; worst at " + w.where);
}

CheckReport chf_asymptotic_vs_oracle()
{
    // With m = omega = 1, a1 = i/2 and y = -2ix, so z = -60i sits at x = 30.
    // e^{-y/2} F(a1, 1/2; y) = e^{i pi/4} (Z+^I + Z-^I) / 2 with both Z
    // transported by the ODE oracle from x = 1.
    const double m = 1.0;
    const double omega = 1.0;
    const double x_far = 30.0;
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-14;
    const auto plus = propagate_to_asymptotic(Branch::I, Sector::Plus, m, omega, 1.0, x_far, cfg).back();
    const auto minus = propagate_to_asymptotic(Branch::I, Sector::Minus, m, omega, 1.0, x_far, cfg).back();
    const Complex y = y_of_x(x_far, omega);
    const Complex oracle = std::exp(y / 2.0) * std::conj(kOverallPhase) * (plus.z + minus.z) / 2.0;
    const auto asym = chf_asymptotic({Complex(0.0, 0.5), 0.5}, y);
    const double err = rel(asym.value, oracle);
    return make_report("specfun.asymptotic_vs_oracle", err, 1e-6,
                       "F(i/2,1/2;-60i): asymptotic " + fmt(asym.value.real()) + fmt(asym.value.imag()) +
                           "i (estimate " + fmt(asym.error_estimate) + ") vs ODE-propagated value");
}

CheckReport log_gamma_values(const std::filesystem::path& dir)
{
    Worst w;
    w.update(std::abs(log_gamma(1.0)), "z=1");
    w.update(rel(log_gamma(0.5), std::log(std::sqrt(kPi))), "z=1/2");
    const std::pair<const char*, Complex> cases[] = {
        {"log_gamma_1+2i", {1.0, 2.0}},
        {"log_gamma_-1.5+0i", {-1.5, 0.0}},
        {"log_gamma_-3.3+4.1i", {-3.3, 4.1}},
        {"log_gamma_40-70i", {40.0, -70.0}},
    };
    for (const auto& [name, z] : cases) {
        w.update(rel(log_gamma(z), golden_value(dir, name)), name);
    }
    return make_report("specfun.log_gamma_values", w.value, 1e-12, "principal branch; worst at " + w.where);
}

CheckReport log_gamma_reflection()
{
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> re(-6.0, 6.0);
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    Worst w;
    for (int i = 0; i < 200; ++i) {
        Complex z(re(rng), im(rng));
        if (std::abs(z.imag()) < 0.05 && std::abs(z.real() - std::round(z.real())) < 0.05) {
            z += 0.25;  // keep away from the poles
        }
        const Complex lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
        const Complex rhs = kPi / std::sin(kPi * z);
        w.update(rel(lhs, rhs), "z=" + fmt(z.real()) + "+" + fmt(z.imag()) + "i");
    }
    return make_report("specfun.log_gamma_reflection", w.value, 1e-10,
                       "exp(lnG(z)+lnG(1-z)) = pi/sin(pi z), 200 points; worst at " + w.where);
}

CheckReport frobenius_vs_chf()
{
    Worst w;
    // The documented point: y = -i, m = 1, omega = 1/2.
    {
        const Complex y(0.0, -1.0);
        const auto sp = solution_params(1.0, 0.5);
        const FrobeniusSeries s(Component::One, FrobeniusExponent::Zero, 1.0, 0.5, 1.0);
        w.update(rel(s.evaluate(y), chf_1f1({sp.a1, 0.5}, y)), "y=-i m=1 omega=1/2");
    }
    for (const auto& [m, omega] : kStandardParams) {
        const auto sp = solution_params(m, omega);
        for (double ay : {0.5, 4.0, 12.0, 30.0}) {
            const Complex y(0.0, -ay);
            const Complex root = std::sqrt(y);
            const FrobeniusSeries s10(Component::One, FrobeniusExponent::Zero, m, omega, ay);
            const FrobeniusSeries s1h(Component::One, FrobeniusExponent::Half, m, omega, ay);
            const FrobeniusSeries s20(Component::Two, FrobeniusExponent::Zero, m, omega, ay);
            const FrobeniusSeries s2h(Component::Two, FrobeniusExponent::Half, m, omega, ay);
            const std::string at = params_label(m, omega) + " |y|=" + fmt(ay);
            w.update(rel(s10.evaluate(y), chf_1f1({sp.a1, 0.5}, y)), at + " j=1 sigma=0");
            w.update(rel(s1h.evaluate(y), root * chf_1f1({sp.a1 + 0.5, 1.5}, y)), at + " j=1 sigma=1/2");
            w.update(rel(s20.evaluate(y), chf_1f1({sp.a2, 0.5}, y)), at + " j=2 sigma=0");
            w.update(rel(s2h.evaluate(y), root * chf_1f1({sp.a2 + 0.5, 1.5}, y)), at + " j=2 sigma=1/2");
        }
    }
    return make_report("specfun.frobenius_agreement", w.value, 1e-12,
                       "Frobenius oracle vs 1F1 evaluator on y = -i|y|; worst at " + w.where);
}

// ---------------------------------------------------------------- potential

namespace {

const double kSignedCouplings[] = {0.5, 1.0, 2.0, 7.3, -1.3};

}  // namespace

CheckReport potential_factorization()
{
    Worst w;
    const auto xs = log_grid(1e-6, 1e6, 10'000);
    for (double m : kSignedCouplings) {
        for (Sector s : {Sector::Plus, Sector::Minus}) {
            for (double x : xs) {
                const double u = ulps_of(potential(x, {m, s}), potential_factorized(x, {m, s}),
                                         potential_term_scale(x, m));
                w.update(u, "m=" + fmt(m) + " " + std::string(to_string(s)) + " x=" + fmt(x));
            }
        }
    }
    return make_report("potential.factorization", w.value, 4.0,
                       "explicit vs W^2 pm W', ulps of |m^2/x| + |m/(2 x^{3/2})|, log grid [1e-6,1e6]; worst at " +
                           w.where);
}

CheckReport potential_shape_invariance(int points)
{
    Worst w;
    const auto xs = log_grid(1e-6, 1e6, points);
    for (double m : kSignedCouplings) {
        for (double x : xs) {
            const double gap = shape_invariance_gap(x, m);
            w.update(ulps_of(gap, 0.0, potential(x, {m, Sector::Plus})), "m=" + fmt(m) + " x=" + fmt(x));
        }
    }
    return make_report("potential.shape_invariance", w.value, 1.0,
                       "V+(x,m) - V-(x,-m) in ulps of V+, " + std::to_string(points) +
                           "-point log grid [1e-6,1e6]; worst at " + w.where);
}

CheckReport potential_sign_structure()
{
    long violations = 0;
    long total = 0;
    for (double m : {0.5, 1.0, 2.0, 7.3}) {
        const auto cs = critical_structure(m);
        for (double x : log_grid(1e-6, 1e6, 4000)) {
            ++total;
            const double vp = potential(x, {m, Sector::Plus});
            const double vm = potential(x, {m, Sector::Minus});
            const double w = superpotential(x, m);
            const bool vm_ok = x < cs.x0 ? vm < 0.0 : (x > cs.x0 ? vm > 0.0 : true);
            if (!(vp > 0.0) || !vm_ok || !(w < 0.0)) {
                ++violations;
            }
        }
    }
    return make_report("potential.sign_structure", static_cast<double>(violations), 0.0,
                       "V+ > 0, sign(V-) flips at x0 = 1/(4m^2), W < 0; " + std::to_string(total) + " samples");
}

CheckReport potential_monotonicity()
{
    long violations = 0;
    for (double m : {0.5, 1.0, 2.0, 7.3}) {
        const auto cs = critical_structure(m);
        const auto xs = log_grid(1e-4 / (m * m), 1e4 / (m * m), 4000);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            if (!(potential_derivative(x, {m, Sector::Plus}) < 0.0)) {
                ++violations;
            }
            const double dvm = potential_derivative(x, {m, Sector::Minus});
            if ((x < cs.x1 && !(dvm > 0.0)) || (x > cs.x1 && !(dvm < 0.0))) {
                ++violations;
            }
            if (i > 0) {
                if (!(potential(x, {m, Sector::Plus}) < potential(xs[i - 1], {m, Sector::Plus}))) {
                    ++violations;
                }
                if (!(superpotential(x, m) > superpotential(xs[i - 1], m))) {
                    ++violations;
                }
            }
        }
        if (std::abs(potential_derivative(cs.x1, {m, Sector::Minus})) > 1e-12 * m * m / (cs.x1 * cs.x1)) {
            ++violations;
        }
    }
    return make_report("potential.monotonicity", static_cast<double>(violations), 0.0,
                       "V+ and -W decreasing, V- rising before x1 = 9/(16m^2) and falling after");
}

CheckReport potential_critical_structure(double m, double x_min, double x_max, int points)
{
    TableRequest req;
    req.kind = TableKind::Potential;
    req.m = m;
    req.sector = Sector::Minus;
    req.x_min = x_min;
    req.x_max = x_max;
    req.points = points;
    const Table t = build_table(req);
    const double step = (x_max - x_min) / (points - 1);
    std::size_t i_zero = 0;
    std::size_t i_max = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (std::abs(t.rows[i][1]) < std::abs(t.rows[i_zero][1])) {
            i_zero = i;
        }
        if (t.rows[i][1] > t.rows[i_max][1]) {
            i_max = i;
        }
    }
    const auto cs = critical_structure(m);
    const double zero_off = std::abs(t.rows[i_zero][0] - cs.x0) / step;
    const double max_off = std::abs(t.rows[i_max][0] - cs.x1) / step;
    return make_report("potential.critical_structure", std::max(zero_off, max_off), 1.0,
                       "V- table m=" + fmt(m) + ": zero at " + fmt(t.rows[i_zero][0]) + " (x0=" + fmt(cs.x0) +
                           "), max at " + fmt(t.rows[i_max][0]) + " (x1=" + fmt(cs.x1) + "), in grid steps");
}

CheckReport potential_tail_exponents()
{
    // The next-order corrections are relative (1/(2m)) x^{-1/2} and 2m x^{1/2},
    // so the leading behaviour is resolved to 1e-6 only well past 1e+-12.
    Worst w;
    for (double m : {0.5, 1.0, 2.0}) {
        for (Sector s : {Sector::Plus, Sector::Minus}) {
            const double far = 1e16;
            const double near = 1e-16;
            const std::string tag = "m=" + fmt(m) + " " + std::string(to_string(s));
            w.update(std::abs(far * potential(far, {m, s}) - m * m) / (m * m), tag + " x V at 1e16");
            const double lead = sign(s) * m / 2.0;
            w.update(std::abs(near * std::sqrt(near) * potential(near, {m, s}) - lead) / std::abs(lead),
                     tag + " x^{3/2} V at 1e-16");
        }
    }
    return make_report("potential.tail_exponents", w.value, 1e-6,
                       "x V -> m^2 and x^{3/2} V -> pm m/2; worst at " + w.where);
}

CheckReport potential_ces_residual()
{
    double worst = 0.0;
    for (double m : {1.0, 7.3, -2.0, 0.5, 1e3}) {
        worst = std::max(worst, std::abs(ces_residual(m)));
    }
    return make_report("potential.ces_constraint", worst, 0.0, "-m^2/4 + (m/2)^2 for m in {1, 7.3, -2, 0.5, 1e3}");
}

// ---------------------------------------------------------------- closedform

namespace {

// How much larger the two products in the Wronskian are than their difference.
double wronskian_condition(const SolutionSample& one, const SolutionSample& two, Complex w)
{
    return (std::abs(one.z * two.dz) + std::abs(two.z * one.dz)) / std::abs(w);
}

const Branch kBranches[] = {Branch::I, Branch::II};
const Sector kSectors[] = {Sector::Plus, Sector::Minus};

std::string combo_label(Branch b, Sector s, double m, double omega)
{
    return std::string(to_string(b)) + "/" + std::string(to_string(s)) + " " + params_label(m, omega);
}

}  // namespace

CheckReport schrodinger_residual(const std::vector<MOmega>& params, double x_min, double x_max, int centres,
                                 double h)
{
    Worst w;
    const auto xc = log_grid(x_min + 2.0 * h, x_max - 2.0 * h, centres);
    for (const auto& [m, omega] : params) {
        for (Branch b : kBranches) {
            for (Sector s : kSectors) {
                for (double c : xc) {
                    std::vector<SolutionSample> stencil;
                    for (int k = -2; k <= 2; ++k) {
                        stencil.push_back(solution_Z(b, s, c + k * h, m, omega));
                    }
                    const auto r = residual_schrodinger(stencil, PotentialSpec{m, s}, omega);
                    w.update(r.max_error, combo_label(b, s, m, omega) + " x=" + fmt(c));
                }
            }
        }
    }
    return make_report("closedform.schrodinger_residual", w.value, 1e-6,
                       "5-point residual / (max(1,|Z|) omega^2), h=" + fmt(h) + ", x in [" + fmt(x_min) + "," +
                           fmt(x_max) + "]; worst at " + w.where);
}

CheckReport wronskian_constancy(const std::vector<MOmega>& params, int points, double x_max)
{
    Worst w;
    double kappa_max = 0.0;
    for (const auto& [m, omega] : params) {
        for (Sector s : kSectors) {
            const Complex want = wronskian_Z(s, m, omega);
            for (double x : log_grid(0.05, x_max, points)) {
                const auto one = solution_Z(Branch::I, s, x, m, omega);
                const auto two = solution_Z(Branch::II, s, x, m, omega);
                kappa_max = std::max(kappa_max, wronskian_condition(one, two, want));
                w.update(rel(sample_wronskian(one, two), want),
                         std::string(to_string(s)) + " " + params_label(m, omega) + " x=" + fmt(x));
            }
        }
    }
    return make_report("closedform.wronskian", w.value, 1e-8,
                       "Z^I dZ^II - Z^II dZ^I vs -+ omega i^{3/2} sqrt(2 omega)/m, " + std::to_string(points) +
                           " log points in [0.05," + fmt(x_max) + "], largest cancellation factor " + fmt(kappa_max) +
                           "; worst at " + w.where);
}

CheckReport wronskian_conditioned(const std::vector<MOmega>& params, int points)
{
    const double eps = std::numeric_limits<double>::epsilon();
    Worst w;
    for (const auto& [m, omega] : params) {
        for (Sector s : kSectors) {
            const Complex want = wronskian_Z(s, m, omega);
            for (double x : log_grid(0.05, 20.0, points)) {
                const auto one = solution_Z(Branch::I, s, x, m, omega);
                const auto two = solution_Z(Branch::II, s, x, m, omega);
                const double kappa = wronskian_condition(one, two, want);
                w.update(rel(sample_wronskian(one, two), want) / (kappa * eps),
                         std::string(to_string(s)) + " " + params_label(m, omega) + " x=" + fmt(x) +
                             " kappa=" + fmt(kappa));
            }
        }
    }
    return make_report("closedform.wronskian_conditioned", w.value, 64.0,
                       "Wronskian error in units of kappa eps, kappa = (|Z^I dZ^II| + |Z^II dZ^I|)/|W|, " +
                           std::to_string(points) + " log points in [0.05,20]; worst at " + w.where);
}

CheckReport intertwining(const std::vector<MOmega>& params, int points)
{
    Worst w;
    for (const auto& [m, omega] : params) {
        for (Branch b : kBranches) {
            for (double x : log_grid(0.05, 20.0, points)) {
                const auto zp = solution_Z(b, Sector::Plus, x, m, omega);
                const auto zm = solution_Z(b, Sector::Minus, x, m, omega);
                const double wx = superpotential(x, m);
                const Complex iw(0.0, omega);
                // (d/dx + W) Z- = i omega Z+ and (d/dx - W) Z+ = i omega Z-.
                const double e1 = std::abs(zm.dz + wx * zm.z - iw * zp.z) / (1.0 + std::abs(zp.z));
                const double e2 = std::abs(zp.dz - wx * zp.z - iw * zm.z) / (1.0 + std::abs(zm.z));
                const std::string at = std::string(to_string(b)) + " " + params_label(m, omega) + " x=" + fmt(x);
                w.update(e1, at + " minus->plus");
                w.update(e2, at + " plus->minus");
            }
        }
    }
    return make_report("closedform.intertwining", w.value, 1e-8,
                       "(d/dx pm W) Z-+ = i omega Z+-, analytic derivatives; worst at " + w.where);
}

CheckReport rtilde_system(const std::vector<MOmega>& params)
{
    Worst w;
    for (const auto& [m, omega] : params) {
        for (RTildeCase c : {RTildeCase::A, RTildeCase::B}) {
            for (double x : log_grid(0.05, 20.0, 40)) {
                const Complex r1 = rtilde(Component::One, c, x, m, omega);
                const Complex r2 = rtilde(Component::Two, c, x, m, omega);
                const Complex d1 = rtilde_dx(Component::One, c, x, m, omega);
                const Complex d2 = rtilde_dx(Component::Two, c, x, m, omega);
                const double wx = superpotential(x, m);
                const Complex iw(0.0, omega);
                const double scale = 1.0 + std::max(std::abs(r1), std::abs(r2));
                const std::string at =
                    std::string(c == RTildeCase::A ? "case a " : "case b ") + params_label(m, omega) + " x=" + fmt(x);
                w.update(std::abs(d2 + iw * r2 + kI * wx * r1) / scale, at + " eq2");
                w.update(std::abs(d1 - iw * r1 - kI * wx * r2) / scale, at + " eq1");
            }
        }
    }
    return make_report("closedform.rtilde_system", w.value, 1e-8,
                       "R2' + i omega R2 = -i W R1 and R1' - i omega R1 = i W R2; worst at " + w.where);
}

CheckReport hermite_identity(int samples)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> lm(std::log(0.05), std::log(20.0));
    Worst w;
    for (int i = 0; i < samples; ++i) {
        const double m = std::exp(lm(rng));
        const double omega = std::exp(lm(rng));
        const auto sp = solution_params(m, omega);
        for (Component j : {Component::One, Component::Two}) {
            const Complex lambda = hermite_lambda(j, m, omega);
            const Complex want = -4.0 * (j == Component::One ? sp.a1 : sp.a2);
            const double u = std::max(ulps_of(lambda.real(), want.real(), std::abs(want.real())),
                                      ulps_of(lambda.imag(), want.imag(), std::abs(want.imag())));
            w.update(u, params_label(m, omega) + (j == Component::One ? " j=1" : " j=2"));
        }
    }
    return make_report("closedform.hermite_identity", w.value, 2.0,
                       "lambda_j = -4 a_j in ulps, " + std::to_string(samples) + " random (m, omega); worst at " +
                           w.where);
}

CheckReport decomposition_identity(const std::vector<MOmega>& params)
{
    const double eps = std::numeric_limits<double>::epsilon();
    Worst w;
    for (const auto& [m, omega] : params) {
        for (Branch b : kBranches) {
            const RTildeCase c = b == Branch::I ? RTildeCase::A : RTildeCase::B;
            for (Sector s : kSectors) {
                for (double x : log_grid(0.05, 20.0, 30)) {
                    const Complex r1 = rtilde(Component::One, c, x, m, omega);
                    const Complex r2 = rtilde(Component::Two, c, x, m, omega);
                    const Complex built = kOverallPhase * (r1 + sign(s) * kI * r2);
                    const Complex z = solution_Z(b, s, x, m, omega).z;
                    w.update(std::abs(built - z) / (eps * std::abs(z)), combo_label(b, s, m, omega) + " x=" + fmt(x));
                }
            }
        }
    }
    return make_report("closedform.decomposition", w.value, 2.0,
                       "e^{-i pi/4}(R1 pm i R2) vs solution_Z in units of eps |Z|; worst at " + w.where);
}

CheckReport susy_map_roundtrip()
{
    Worst w;
    for (const auto& [m, omega] : kStandardParams) {
        for (Branch b : kBranches) {
            for (Sector s : kSectors) {
                for (double x : {0.3, 1.0, 5.0}) {
                    const auto z = solution_Z(b, s, x, m, omega);
                    const auto back = susy_map(partner(s), susy_map(s, z, m, omega), m, omega);
                    const std::string at = combo_label(b, s, m, omega) + " x=" + fmt(x);
                    w.update(rel1(back.z, z.z), at);
                    w.update(rel1(back.dz, z.dz), at + " dZ");
                    // The single map sends each branch onto its partner-sector twin.
                    const auto image = susy_map(s, z, m, omega);
                    const auto twin = solution_Z(b, partner(s), x, m, omega);
                    w.update(rel1(image.z, twin.z), at + " image");
                }
            }
        }
    }
    return make_report("closedform.susy_map", w.value, 1e-9,
                       "two-step round trip and one-step image vs partner closed form; worst at " + w.where);
}

CheckReport closed_form_golden(const std::filesystem::path& dir)
{
    Worst w;
    w.update(rel(rtilde(Component::Two, RTildeCase::A, 1.0, 1.0, 0.5), golden_value(dir, "rtilde2_a_m1_w0.5_x1")),
             "rtilde j=2 case a m=1 omega=1/2 x=1");
    w.update(rel(solution_Z(Branch::I, Sector::Plus, 2.0, 1.0, 1.0).z, golden_value(dir, "zI_plus_m1_w1_x2")),
             "Z+^I m=1 omega=1 x=2");
    w.update(rel(solution_Z(Branch::I, Sector::Minus, 3.0, 2.0, 0.5).z, golden_value(dir, "zI_minus_m2_w0.5_x3")),
             "Z-^I m=2 omega=1/2 x=3");
    w.update(rel(frobenius_solution_Z(Branch::I, Sector::Plus, 2.0, 1.0, 1.0), golden_value(dir, "zI_plus_m1_w1_x2")),
             "Frobenius Z+^I m=1 omega=1 x=2");
    for (const auto& [m, omega] : kStandardParams) {
        for (Branch b : kBranches) {
            for (Sector s : kSectors) {
                for (double x : {0.1, 1.0, 4.0}) {
                    w.update(rel(solution_Z(b, s, x, m, omega).z, frobenius_solution_Z(b, s, x, m, omega)),
                             combo_label(b, s, m, omega) + " x=" + fmt(x) + " vs Frobenius");
                    w.update(rel(solution_Z(b, s, x, m, omega).z, solution_Z_explicit(b, s, x, m, omega)),
                             combo_label(b, s, m, omega) + " x=" + fmt(x) + " vs display form");
                }
            }
        }
    }
    return make_report("closedform.golden", w.value, 1e-10,
                       "closed forms vs high-precision values, the Frobenius oracle and the i^{3/2} display form; "
                       "worst at " +
                           w.where);
}

CheckReport small_x_limits()
{
    const double x = 1e-20;
    Worst w;
    for (const auto& [m, omega] : kStandardParams) {
        for (Sector s : kSectors) {
            w.update(rel(solution_Z(Branch::I, s, x, m, omega).z, kOverallPhase),
                     "I " + std::string(to_string(s)) + params_label(m, omega));
            const Complex want = kOverallPhase * sign(s) * std::sqrt(2.0 * omega) * kISqrtI / (2.0 * m);
            w.update(rel(solution_Z(Branch::II, s, x, m, omega).z, want),
                     "II " + std::string(to_string(s)) + params_label(m, omega));
        }
        w.update(rel(rtilde(Component::One, RTildeCase::A, x, m, omega), 1.0), "R1 case a");
        w.update(std::abs(rtilde(Component::One, RTildeCase::B, x, m, omega)), "R1 case b");
    }
    return make_report("closedform.small_x_limits", w.value, 1e-9, "y -> 0 limits at x = 1e-20; worst at " + w.where);
}

// ---------------------------------------------------------------- oracle

CheckReport oracle_free_wave()
{
    const double x0 = 1e-3;
    Worst w;
    for (double omega : {0.5, 1.0, 2.0}) {
        SolutionSample init{x0, 0.0, omega};
        const auto xs = make_grid(x0, 10.0, 101, Spacing::Linear);
        IntegratorConfig cfg;
        cfg.rel_tol = 1e-12;
        cfg.abs_tol = 1e-14;
        const auto out = integrate_to([](double) { return 0.0; }, omega, init, xs, cfg);
        for (const auto& s : out) {
            w.update(std::abs(s.z - std::sin(omega * (s.x - x0))), "omega=" + fmt(omega) + " x=" + fmt(s.x));
        }
    }
    return make_report("oracle.free_wave", w.value, 1e-10,
                       "Z'' = -omega^2 Z from (0, omega) vs sin(omega (x - x0)), rel_tol 1e-12; worst at " + w.where);
}

CheckReport oracle_agreement(const std::vector<MOmega>& params, double x_start, double x_end, int samples)
{
    Worst w;
    IntegratorConfig cfg;
    cfg.dense_points = samples;
    for (const auto& [m, omega] : params) {
        for (Branch b : kBranches) {
            for (Sector s : kSectors) {
                ODEProblem p{{m, s}, omega, x_start, x_end, solution_Z(b, s, x_start, m, omega)};
                for (const auto& got : integrate(p, cfg)) {
                    const auto want = solution_Z(b, s, got.x, m, omega);
                    w.update(rel1(got.z, want.z), combo_label(b, s, m, omega) + " x=" + fmt(got.x));
                }
            }
        }
    }
    return make_report("oracle.closed_form_agreement", w.value, 1e-7,
                       "ODE from closed form at x=" + fmt(x_start) + " vs closed form on [" + fmt(x_start) + "," +
                           fmt(x_end) + "], relative to max(1,|Z|); worst at " + w.where);
}

CheckReport oracle_reverse_roundtrip()
{
    Worst w;
    for (Branch b : kBranches) {
        for (Sector s : kSectors) {
            const auto start = solution_Z(b, s, 1.0, 1.0, 1.0);
            ODEProblem fwd{{1.0, s}, 1.0, 1.0, 10.0, start};
            const auto end = integrate(fwd, {}).back();
            ODEProblem rev{{1.0, s}, 1.0, 10.0, 1.0, end};
            const auto back = integrate(rev, {}).back();
            const std::string at = std::string(to_string(b)) + "/" + std::string(to_string(s));
            w.update(rel1(back.z, start.z), at);
            w.update(rel1(back.dz, start.dz), at + " dZ");
        }
    }
    return make_report("oracle.reverse_roundtrip", w.value, 1e-7,
                       "1 -> 10 -> 1 recovers the initial sample, m=omega=1; worst at " + w.where);
}

CheckReport oracle_wronskian_transport(const std::vector<MOmega>& params)
{
    Worst w;
    for (const auto& [m, omega] : params) {
        for (Sector s : kSectors) {
            IntegratorConfig cfg;
            cfg.dense_points = 31;
            const auto one = propagate_to_asymptotic(Branch::I, s, m, omega, 1.0, 1e3, cfg);
            const auto two = propagate_to_asymptotic(Branch::II, s, m, omega, 1.0, 1e3, cfg);
            const Complex want = wronskian_Z(s, m, omega);
            for (std::size_t i = 0; i < one.size(); ++i) {
                w.update(rel(sample_wronskian(one[i], two[i]), want),
                         std::string(to_string(s)) + " " + params_label(m, omega) + " x=" + fmt(one[i].x));
            }
        }
    }
    return make_report("oracle.wronskian_transport", w.value, 1e-6,
                       "Wronskian of the propagated branch pair over [1, 1e3]; worst at " + w.where);
}

CheckReport oracle_dense_invariance()
{
    Worst w;
    for (Sector s : kSectors) {
        IntegratorConfig a;
        a.dense_points = 7;
        IntegratorConfig b = a;
        b.dense_points = 14;
        const auto ea = propagate_to_asymptotic(Branch::I, s, 1.0, 1.0, 1.0, 50.0, a).back();
        const auto eb = propagate_to_asymptotic(Branch::I, s, 1.0, 1.0, 1.0, 50.0, b).back();
        w.update(rel1(ea.z, eb.z), std::string(to_string(s)));
    }
    return make_report("oracle.dense_output_invariance", w.value, 1e-9,
                       "endpoint with 7 vs 14 dense points; worst in sector " + w.where);
}

CheckReport oracle_tolerance_scaling()
{
    const auto start = solution_Z(Branch::I, Sector::Plus, 1.0, 1.0, 1.0);
    const auto want = solution_Z(Branch::I, Sector::Plus, 10.0, 1.0, 1.0);
    std::vector<double> errors;
    std::vector<double> steps;
    for (double tol = 1e-5; tol >= 1e-5 / 64.0 * 0.99; tol /= 2.0) {
        IntegratorConfig cfg;
        cfg.rel_tol = tol;
        cfg.abs_tol = tol * 1e-2;
        IntegrationStats st;
        ODEProblem p{{1.0, Sector::Plus}, 1.0, 1.0, 10.0, start};
        errors.push_back(rel1(integrate(p, cfg, &st).back().z, want.z));
        steps.push_back(static_cast<double>(st.accepted));
    }
    int non_monotone = 0;
    for (std::size_t i = 1; i < errors.size(); ++i) {
        if (!(errors[i] < errors[i - 1])) {
            ++non_monotone;
        }
    }
    // Error against the number of steps N ~ 1/h gives the order.
    const double order = std::log(errors.front() / errors.back()) / std::log(steps.back() / steps.front());
    std::ostringstream d;
    d << "rel_tol 1e-5 halved 6 times; errors";
    for (double e : errors) {
        d << ' ' << fmt(e);
    }
    d << "; empirical order " << fmt(order) << " (need >= 4); non-monotone steps " << non_monotone;
    const double shortfall = std::max(0.0, 4.0 - order) + non_monotone;
    return make_report("oracle.tolerance_scaling", shortfall, 0.0, d.str());
}

CheckReport oracle_frobenius_termwise()
{
    Worst w;
    for (const auto& [m, omega] : kStandardParams) {
        const auto sp = solution_params(m, omega);
        for (Component j : {Component::One, Component::Two}) {
            const Complex a = j == Component::One ? sp.a1 : sp.a2;
            const FrobeniusSeries s0(j, FrobeniusExponent::Zero, m, omega, 10.0);
            const FrobeniusSeries sh(j, FrobeniusExponent::Half, m, omega, 10.0);
            // 1F1 term ratios: (a+k)/((b+k)(k+1)) with (a, b) = (a_j, 1/2) and (a_j + 1/2, 3/2).
            const std::string at = params_label(m, omega) + (j == Component::One ? " j=1" : " j=2");
            w.update(std::abs(s0.coefficient(0) - 1.0), at + " c0");
            w.update(std::abs(sh.coefficient(0) - 1.0), at + " c0 sigma=1/2");
            for (std::size_t k = 0; k < 50; ++k) {
                const double kk = static_cast<double>(k);
                const Complex r0 = (a + kk) / ((0.5 + kk) * (kk + 1.0));
                const Complex rh = (a + 0.5 + kk) / ((1.5 + kk) * (kk + 1.0));
                w.update(rel(s0.coefficient(k + 1) / s0.coefficient(k), r0), at + " sigma=0 k=" + std::to_string(k));
                w.update(rel(sh.coefficient(k + 1) / sh.coefficient(k), rh), at + " sigma=1/2 k=" + std::to_string(k));
            }
        }
    }
    return make_report("oracle.frobenius_termwise", w.value, 1e-14,
                       "Frobenius coefficient ratios vs the 1F1 term ratios for k < 50; worst at " + w.where);
}

CheckReport oracle_residual_detector()
{
    const double omega = 1.0;
    const double h = 1e-3;
    std::vector<SolutionSample> free;
    std::vector<SolutionSample> closed;
    for (int i = 0; i < 201; ++i) {
        const double x = 1.0 + i * h;
        free.push_back({x, std::sin(omega * x), omega * std::cos(omega * x)});
        closed.push_back(solution_Z(Branch::I, Sector::Plus, x, 1.0, omega));
    }
    const double free_res =
        residual_schrodinger(free, [](double) { return 0.0; }, omega).max_error;
    const double clean = residual_schrodinger(closed, PotentialSpec{1.0, Sector::Plus}, omega).max_error;
    closed[100].z *= 1.01;
    const double spiked = residual_schrodinger(closed, PotentialSpec{1.0, Sector::Plus}, omega).max_error;
    // The detector works when clean data pass and the corrupted sample does not.
    const double ratio = std::max(clean, free_res) / spiked;
    return make_report("oracle.residual_detector", ratio, 1e-3,
                       "free wave " + fmt(free_res) + ", clean " + fmt(clean) + ", one sample scaled by 1.01 " +
                           fmt(spiked) + "; reported value is (clean or free) / corrupted");
}

CheckReport oracle_overlap_endpoint()
{
    Worst w;
    for (const auto& [m, omega] : kStandardParams) {
        for (Branch b : kBranches) {
            for (Sector s : kSectors) {
                const double x_match = 10.0 / omega;
                const auto end = propagate_to_asymptotic(b, s, m, omega, x_match, 1.5 * x_match).back();
                w.update(rel1(end.z, solution_Z(b, s, 1.5 * x_match, m, omega).z), combo_label(b, s, m, omega));
            }
        }
    }
    return make_report("oracle.overlap_endpoint", w.value, 1e-7,
                       "propagated from x_match = 10/omega to 1.5 x_match vs closed form; worst at " + w.where);
}

// ---------------------------------------------------------------- scattering

CheckReport phase_relation(double m, double omega, double x_max)
{
    PhaseConfig cfg;
    cfg.x_max = x_max;
    const auto r = phase_difference(m, omega, cfg);
    std::ostringstream d;
    d << "diff_mod_pi " << format_number(r.diff_mod_pi) << " over " << r.table.size() << " points up to x = "
      << fmt(r.x_sequence.back()) << "; residuals";
    for (const auto& row : r.table) {
        d << ' ' << fmt(row.residual);
    }
    d << (r.converged ? "; converged" : "; not converged");
    const double err = r.converged ? r.residual_to_half_pi : kInf;
    std::string name = "scattering.phase_relation_m" + fmt(m) + "_w" + fmt(omega);
    return make_report(std::move(name), err, 1e-3, d.str());
}

CheckReport phase_imag_consistency()
{
    Worst w;
    for (const auto& [m, omega] : kStandardParams) {
        PhaseConfig re;
        PhaseConfig im;
        im.part = SolutionPart::Imag;
        const double a = phase_difference(m, omega, re).diff_mod_pi;
        const double b = phase_difference(m, omega, im).diff_mod_pi;
        w.update(std::abs(reduce_mod_pi(a - b)), params_label(m, omega));
    }
    return make_report("scattering.imag_part_consistency", w.value, 1e-3,
                       "diff_mod_pi from re(Z) vs im(Z); worst at " + w.where);
}

CheckReport phase_scaling_covariance()
{
    Worst w;
    const double base = phase_difference(1.0, 1.0).diff_mod_pi;
    for (double s : {0.5, 2.0, 3.0}) {
        PhaseConfig cfg;
        cfg.x_max = 1e4 / (s * s);
        const double scaled = phase_difference(s, s * s, cfg).diff_mod_pi;
        w.update(std::abs(reduce_mod_pi(scaled - base)), "s=" + fmt(s));
    }
    return make_report("scattering.scaling_covariance", w.value, 1e-3,
                       "(m, omega, x) -> (s m, s^2 omega, x/s^2) leaves diff_mod_pi unchanged; worst at " + w.where);
}

CheckReport phase_synthetic_relation()
{
    Worst w;
    for (double wv : {-5.0, -1.0, -0.2, 0.3, 1.0, 4.0}) {
        for (double omega : {0.5, 1.0, 3.0}) {
            for (double dm : {-1.2, 0.0, 0.4, 1.5}) {
                w.update(synthetic_superpotential_residual(wv, omega, dm),
                         "w=" + fmt(wv) + " omega=" + fmt(omega) + " delta=" + fmt(dm));
            }
        }
    }
    return make_report("scattering.synthetic_relation", w.value, 1e-12,
                       "2(delta- - delta+) = arg((w - i omega)/(w + i omega)) mod 2 pi for constant w; worst at " +
                           w.where);
}

CheckReport phase_log_drift()
{
    const double m = 1.0;
    const double omega = 1.0;
    IntegratorConfig cfg;
    cfg.dense_points = 2;
    const auto at_1k = propagate_to_asymptotic(Branch::I, Sector::Minus, m, omega, 20.0, 1e3, cfg).back();
    const double xs[] = {2e3};
    const auto at_2k =
        integrate_to([m](double x) { return potential(x, {m, Sector::Minus}); }, omega, at_1k, xs, cfg).back();
    const double eta = coulomb_eta(m, omega);
    const double d1 = local_phase(at_1k, omega, eta).delta_log_corrected;
    const double d2 = local_phase(at_2k, omega, eta).delta_log_corrected;
    const double drift = std::abs(reduce_mod_pi(d2 - d1));
    return make_report("scattering.log_corrected_drift", drift, 1e-2,
                       "Z-^I, m=omega=1: delta_log_corrected " + fmt(d1) + " at 1e3, " + fmt(d2) + " at 2e3");
}

CheckReport coulomb_eta_identity()
{
    Worst w;
    for (const auto& [m, omega] : std::vector<MOmega>{{1.0, 0.5}, {2.0, 1.0}, {0.5, 2.0}, {3.7, 0.9}}) {
        const Complex neg_i_a1 = -kI * solution_params(m, omega).a1;
        w.update(std::abs(coulomb_eta(m, omega) - neg_i_a1.real()) + std::abs(neg_i_a1.imag()),
                 params_label(m, omega));
    }
    w.update(std::abs(coulomb_eta(1.0, 0.5) - 1.0), "(1, 1/2) -> 1");
    w.update(std::abs(coulomb_eta(2.0, 1.0) - 2.0), "(2, 1) -> 2");
    return make_report("scattering.coulomb_eta", w.value, 0.0, "eta = m^2/(2 omega) = -i a1; worst at " + w.where);
}

}  // namespace checks

namespace {

struct Entry {
    const char* suite;
    std::function<CheckReport(const std::filesystem::path&)> run;
};

template <class F>
Entry plain(const char* suite, F f)
{
    return {suite, [f](const std::filesystem::path&) { return f(); }};
}

std::vector<Entry> registry()
{
    using namespace checks;
    return {
        {"specfun", [](const auto& d) { return chf_golden(d); }},
        plain("specfun", chf_kummer_identity),
        plain("specfun", chf_derivative_fd),
        plain("specfun", chf_wronskian),
        plain("specfun", chf_contiguous),
        plain("specfun", chf_asymptotic_exact),
        plain("specfun", chf_asymptotic_vs_oracle),
        {"specfun", [](const auto& d) { return log_gamma_values(d); }},
        plain("specfun", log_gamma_reflection),
        plain("specfun", frobenius_vs_chf),

        plain("potential", potential_factorization),
        plain("potential", [] { return potential_shape_invariance(); }),
        plain("potential", potential_sign_structure),
        plain("potential", potential_monotonicity),
        plain("potential", [] { return potential_critical_structure(); }),
        plain("potential", potential_tail_exponents),
        plain("potential", potential_ces_residual),

        plain("closedform", [] { return schrodinger_residual(kStandardParams, 0.1, 20.0); }),
        plain("closedform",
              [] {
                  auto r = schrodinger_residual(kStandardParams, 0.05, 0.1, 40, 2.5e-4);
                  r.name += "_near_origin";
                  return r;
              }),
        plain("closedform", [] { return wronskian_constancy(kStandardParams); }),
        plain("closedform", [] { return wronskian_conditioned(kStandardParams); }),
        plain("closedform", [] { return intertwining(kStandardParams); }),
        plain("closedform", [] { return rtilde_system(kStandardParams); }),
        plain("closedform", [] { return hermite_identity(); }),
        plain("closedform", [] { return decomposition_identity(kStandardParams); }),
        plain("closedform", susy_map_roundtrip),
        {"closedform", [](const auto& d) { return closed_form_golden(d); }},
        plain("closedform", small_x_limits),

        plain("oracle", oracle_free_wave),
        plain("oracle", [] { return oracle_agreement(kStandardParams, 0.1, 20.0, 200); }),
        plain("oracle", oracle_reverse_roundtrip),
        plain("oracle", [] { return oracle_wronskian_transport(kTransportParams); }),
        plain("oracle", oracle_dense_invariance),
        plain("oracle", oracle_tolerance_scaling),
        plain("oracle", oracle_frobenius_termwise),
        plain("oracle", oracle_residual_detector),
        plain("oracle", oracle_overlap_endpoint),

        plain("scattering", [] { return phase_relation(1.0, 1.0); }),
        plain("scattering", [] { return phase_relation(0.5, 2.0); }),
        plain("scattering", phase_imag_consistency),
        plain("scattering", phase_scaling_covariance),
        plain("scattering", phase_synthetic_relation),
        plain("scattering", phase_log_drift),
        plain("scattering", coulomb_eta_identity),
    };
}

bool uses_golden(std::string_view suite) { return suite == "all" || suite == "specfun" || suite == "closedform"; }

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"specfun", "potential", "closedform", "oracle", "scattering", "all"};
    return names;
}

bool is_suite(std::string_view name)
{
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& opts)
{
    if (!is_suite(suite)) {
        throw Error(ErrorCode::InvalidParams, "unknown suite '" + std::string(suite) +
                                                  "' (expected specfun, potential, closedform, oracle, scattering "
                                                  "or all)");
    }
    if (opts.rel_tol && !(*opts.rel_tol > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "tolerance override must be positive");
    }
    const std::filesystem::path dir = opts.golden.empty() ? golden_dir() : opts.golden;
    if (uses_golden(suite)) {
        // Configuration problems surface here, before any check runs.
        (void)load_golden_chf(dir);
        (void)load_golden_values(dir);
    }

    std::vector<std::future<CheckReport>> jobs;
    for (const auto& e : registry()) {
        if (suite != "all" && suite != e.suite) {
            continue;
        }
        jobs.push_back(std::async(std::launch::async, [run = e.run, dir, s = std::string(e.suite)]() {
            try {
                return run(dir);
            } catch (const std::exception& ex) {
                return make_report(s + ".exception", kInf, 0.0, ex.what());
            }
        }));
    }
    std::vector<CheckReport> out;
    for (auto& j : jobs) {
        out.push_back(j.get());
    }
    if (opts.rel_tol) {
        for (auto& r : out) {
            retolerance(r, *opts.rel_tol);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
}

bool all_passed(const std::vector<CheckReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace susyces
