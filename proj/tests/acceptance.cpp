// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "susyces/scattering.hpp"
#include "susyces/table.hpp"
#include "susyces/verify.hpp"

using namespace susyces;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

Outcome from_reports(std::initializer_list<CheckReport> reports)
{
    Outcome o{true, {}};
    for (const auto& r : reports) {
        o.passed = o.passed && r.passed;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s %.3g/%.3g", o.detail.empty() ? "" : "; ", r.name.c_str(), r.max_error,
                      r.tolerance);
        o.detail += buf;
    }
    return o;
}

Outcome phase_criterion()
{
    Outcome o{true, {}};
    for (auto [m, omega] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
        const auto r = phase_difference(m, omega);
        const bool ok = r.converged && r.residual_to_half_pi < 1e-3 && r.x_sequence.back() <= 1e4;
        o.passed = o.passed && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s(m=%g, omega=%g) residual %.3g at x=%g", o.detail.empty() ? "" : "; ", m,
                      omega, r.residual_to_half_pi, r.x_sequence.back());
        o.detail += buf;
    }
    return o;
}

Outcome figures_criterion()
{
    const auto figs = figure_tables();
    const auto& wp = figs.at(0).table.rows;
    const auto& wm = figs.at(1).table.rows;
    const auto& vp = figs.at(2).table.rows;
    const auto& vm = figs.at(3).table.rows;
    int violations = 0;
    for (std::size_t i = 0; i < wp.size(); ++i) {
        violations += wp[i][1] < 0.0 ? 0 : 1;                       // W < 0 for m = 1
        violations += wm[i][1] > 0.0 ? 0 : 1;                       // W > 0 for m = -1
        violations += i == 0 || wp[i][1] > wp[i - 1][1] ? 0 : 1;    // rising towards 0
        violations += i == 0 || wm[i][1] < wm[i - 1][1] ? 0 : 1;    // falling towards 0
        violations += vp[i][1] > 0.0 ? 0 : 1;                       // V+ positive
        violations += i == 0 || vp[i][1] < vp[i - 1][1] ? 0 : 1;    // V+ decreasing
        const double x = vm[i][0];
        if (x < 1.0 / 16.0) {
            violations += vm[i][1] < 0.0 ? 0 : 1;
        } else if (x > 1.0 / 16.0) {
            violations += vm[i][1] > 0.0 ? 0 : 1;
        }
    }
    const auto peak = std::max_element(vm.begin(), vm.end(), [](auto& a, auto& b) { return a[1] < b[1]; });
    const double dx = (kFigureXMax - kFigureXMin) / (kFigurePoints - 1);
    const bool peak_ok = std::abs((*peak)[0] - 9.0 / 64.0) <= dx;
    return {violations == 0 && peak_ok, std::to_string(violations) + " sign/monotonicity violations, V- peak at x=" +
                                             std::to_string((*peak)[0])};
}

struct Criterion {
    const char* id;
    const char* what;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<MOmega> unit_params = {{1.0, 1.0}};
    const std::vector<Criterion> criteria = {
        {"AC1", "Schrodinger residual on [0.1, 20]", 30.0,
         [] { return from_reports({checks::schrodinger_residual(kStandardParams, 0.1, 20.0)}); }},
        {"AC2", "Wronskian constant at 50 points", 0.0,
         [] {
             return from_reports({checks::wronskian_constancy(kStandardParams, 50),
                                  checks::wronskian_conditioned(kStandardParams, 50)});
         }},
        {"AC3", "intertwining relations", 0.0, [] { return from_reports({checks::intertwining(kStandardParams)}); }},
        {"AC4", "shape invariance on a 1e4-point log grid", 0.0,
         [] { return from_reports({checks::potential_shape_invariance(10'000)}); }},
        {"AC5", "critical structure of the m = 2 V- table", 0.0,
         [] { return from_reports({checks::potential_critical_structure()}); }},
        {"AC6", "ODE from x = 1 matches the closed form at x = 10", 0.0,
         [unit_params] { return from_reports({checks::oracle_agreement(unit_params, 1.0, 10.0, 2)}); }},
        {"AC7", "phase difference converges to pi/2 by x = 1e4", 60.0, phase_criterion},
        {"AC8", "special-function battery", 0.0,
         [] {
             return from_reports({checks::chf_kummer_identity(), checks::chf_wronskian(), checks::chf_derivative_fd(),
                                  checks::frobenius_vs_chf()});
         }},
        {"AC9", "Hermite identity for 100 random (m, omega)", 0.0,
         [] { return from_reports({checks::hermite_identity(100)}); }},
        {"AC10", "figure sign and monotonicity assertions", 0.0, figures_criterion},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing;
        if (c.budget_s > 0.0 && secs > c.budget_s) {
            o.passed = false;
            timing = " over budget";
        }
        std::printf("%s %s: %s (%.2f s%s) [%s]\n", o.passed ? "PASS" : "FAIL", c.id, c.what, secs, timing.c_str(),
                    o.detail.c_str());
        failed += o.passed ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
