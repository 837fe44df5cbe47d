// susy_ces: tables, figure data, verification suites and the phase-shift check.
// Exit codes: 0 success, 1 failed check / no convergence / I/O failure, 2 usage or configuration error.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "susyces/error.hpp"
#include "susyces/scattering.hpp"
#include "susyces/table.hpp"
#include "susyces/verify.hpp"

namespace {

using namespace susyces;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
    } else {
        write_text_file(out, text);
    }
}

std::string phase_json(double m, double omega, const PhaseDifferenceResult& r)
{
    nlohmann::ordered_json j;
    j["m"] = m;
    j["omega"] = omega;
    j["diff_mod_pi"] = r.diff_mod_pi;
    j["residual_to_half_pi"] = r.residual_to_half_pi;
    j["converged"] = r.converged;
    j["x_sequence"] = r.x_sequence;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.table) {
        rows.push_back({{"x", row.x},
                        {"delta_minus", row.delta_minus},
                        {"delta_plus", row.delta_plus},
                        {"diff_mod_pi", row.diff_mod_pi},
                        {"residual", row.residual}});
    }
    j["table"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partner potentials V = m^2/x +- (m/2) x^{-3/2}: tables, figures, verification and phase shifts"};
    app.require_subcommand(1);

    const std::map<std::string, Sector> sectors{{"plus", Sector::Plus}, {"minus", Sector::Minus}};
    const std::map<std::string, Branch> branches{{"I", Branch::I}, {"II", Branch::II}};
    const std::map<std::string, TableKind> kinds{{"superpotential", TableKind::Superpotential},
                                                 {"potential", TableKind::Potential},
                                                 {"solution", TableKind::Solution}};
    const std::map<std::string, Spacing> spacings{{"linear", Spacing::Linear}, {"log", Spacing::Log}};
    const std::map<std::string, TableFormat> formats{{"csv", TableFormat::Csv}, {"json", TableFormat::Json}};

    // table
    TableRequest req;
    std::string table_out = "-";
    auto* table = app.add_subcommand("table", "Tabulate W, V or Z on a grid");
    std::string kind = "potential";
    std::string sector = "plus";
    std::string branch = "I";
    std::string spacing = "linear";
    std::string format_name = "csv";
    table->add_option("--kind", kind, "superpotential | potential | solution")
        ->check(CLI::IsMember(kinds))
        ->capture_default_str();
    table->add_option("--m", req.m, "Coupling m")->capture_default_str();
    table->add_option("--omega", req.omega, "Wavenumber omega (E = omega^2)")->capture_default_str();
    table->add_option("--sector", sector, "plus | minus")->check(CLI::IsMember(sectors))->capture_default_str();
    table->add_option("--branch", branch, "I | II")->check(CLI::IsMember(branches))->capture_default_str();
    table->add_option("--x-min", req.x_min, "Left end of the grid")->capture_default_str();
    table->add_option("--x-max", req.x_max, "Right end of the grid")->capture_default_str();
    table->add_option("--points", req.points, "Number of grid points (>= 2)")->capture_default_str();
    table->add_option("--spacing", spacing, "linear | log")->check(CLI::IsMember(spacings))->capture_default_str();
    table->add_option("--format", format_name, "csv | json")->check(CLI::IsMember(formats))->capture_default_str();
    table->add_option("--out", table_out, "Output path, - for stdout")->capture_default_str();

    // verify
    std::string suite;
    std::optional<double> rel_tol;
    std::string verify_out = "-";
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print CheckReport JSON");
    verify->add_option("--suite", suite, "specfun | potential | closedform | oracle | scattering | all")->required();
    verify->add_option("--rel-tol", rel_tol, "Replace every check's tolerance");
    verify->add_option("--out", verify_out, "Output path, - for stdout")->capture_default_str();

    // phase
    double pm = 1.0;
    double pomega = 1.0;
    PhaseConfig pcfg;
    std::string phase_out = "-";
    auto* phase = app.add_subcommand("phase", "Phase-shift difference between the partner sectors");
    phase->add_option("--m", pm, "Coupling m")->capture_default_str();
    phase->add_option("--omega", pomega, "Wavenumber omega")->capture_default_str();
    phase->add_option("--x-max", pcfg.x_max, "Furthest evaluation point")->capture_default_str();
    phase->add_option("--out", phase_out, "Output path, - for stdout")->capture_default_str();

    // figures
    std::string out_dir = ".";
    auto* figures = app.add_subcommand("figures", "Write the superpotential and potential curves as CSV");
    figures->add_option("--out-dir", out_dir, "Existing output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*table) {
            req.kind = kinds.at(kind);
            req.sector = sectors.at(sector);
            req.branch = branches.at(branch);
            req.spacing = spacings.at(spacing);
            emit(format_table(build_table(req), formats.at(format_name)), table_out);
            return 0;
        }
        if (*verify) {
            if (!is_suite(suite)) {
                std::cerr << "unknown suite '" << suite << "'\n" << verify->help();
                return kExitUsage;
            }
            VerifyOptions opts;
            opts.rel_tol = rel_tol;
            const auto reports = run_suite(suite, opts);
            emit(to_json(reports), verify_out);
            std::size_t passed = 0;
            for (const auto& r : reports) {
                passed += r.passed ? 1 : 0;
                if (!r.passed) {
                    std::cerr << "FAIL " << r.name << ": " << r.max_error << " > " << r.tolerance << "\n";
                }
            }
            std::cerr << passed << "/" << reports.size() << " checks passed\n";
            return passed == reports.size() ? 0 : kExitFail;
        }
        if (*phase) {
            const auto r = phase_difference(pm, pomega, pcfg);
            emit(phase_json(pm, pomega, r), phase_out);
            if (!r.converged) {
                std::cerr << to_string(ErrorCode::NotConverged) << ": residual " << r.residual_to_half_pi
                          << " after " << r.table.size() << " points up to x = " << r.x_sequence.back() << "\n";
                return kExitFail;
            }
            return 0;
        }
        if (*figures) {
            for (const auto& p : write_figures(out_dir)) {
                std::cerr << "wrote " << p.string() << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::NotConverged ? kExitFail : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
