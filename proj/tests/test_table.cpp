#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "susyces/table.hpp"

using namespace susyces;
using testing::throws_code;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string& header)
{
    std::istringstream in(text);
    std::getline(in, header);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_SUITE("table") {

TEST_CASE("grids hit both ends") {
    for (Spacing s : {Spacing::Linear, Spacing::Log}) {
        const auto g = make_grid(0.01, 2.0, 7, s);
        CHECK(g.size() == 7);
        CHECK(g.front() == 0.01);
        CHECK(g.back() == 2.0);
        CHECK(std::is_sorted(g.begin(), g.end()));
        const auto two = make_grid(0.5, 3.0, 2, s);
        CHECK(two == std::vector<double>{0.5, 3.0});
    }
    const auto lg = make_grid(1e-2, 1e2, 5, Spacing::Log);
    CHECK(lg[2] == doctest::Approx(1.0));
    CHECK(throws_code([] { return make_grid(0.0, 1.0, 5, Spacing::Linear); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return make_grid(2.0, 1.0, 5, Spacing::Linear); }, ErrorCode::InvalidParams));
    CHECK(throws_code([] { return make_grid(0.1, 1.0, 1, Spacing::Log); }, ErrorCode::InvalidParams));
}

TEST_CASE("table columns and values") {
    TableRequest r;
    r.kind = TableKind::Superpotential;
    r.m = 1.0;
    r.x_min = 0.25;
    r.x_max = 4.0;
    r.points = 3;
    const auto w = build_table(r);
    CHECK(w.columns == std::vector<std::string>{"x", "W"});
    CHECK(w.rows[0][1] == doctest::Approx(-2.0));
    CHECK(w.rows[2][1] == doctest::Approx(-0.5));

    r.kind = TableKind::Potential;
    r.m = 2.0;
    r.sector = Sector::Minus;
    const auto v = build_table(r);
    CHECK(v.columns == std::vector<std::string>{"x", "V"});
    CHECK(v.rows[0][1] == doctest::Approx(potential(0.25, {2.0, Sector::Minus})));

    r.kind = TableKind::Solution;
    r.branch = Branch::II;
    const auto z = build_table(r);
    CHECK(z.columns.size() == 5);
    const auto s = solution_Z(Branch::II, Sector::Minus, 4.0, 2.0, 1.0);
    CHECK(z.rows[2][1] == s.z.real());
    CHECK(z.rows[2][4] == s.dz.imag());

    r.m = 0.0;
    CHECK(throws_code([&] { return build_table(r); }, ErrorCode::InvalidParams));
}

TEST_CASE("output is deterministic and round-trips") {
    TableRequest r;
    r.kind = TableKind::Solution;
    r.m = 1.0;
    r.omega = 0.7;
    r.points = 40;
    r.spacing = Spacing::Log;
    r.x_min = 0.05;
    r.x_max = 9.0;
    const auto t = build_table(r);
    const auto csv = format_table(t, TableFormat::Csv);
    CHECK(csv == format_table(build_table(r), TableFormat::Csv));
    CHECK(csv.find('\r') == std::string::npos);
    std::string header;
    const auto rows = parse_csv(csv, header);
    CHECK(header == "x,Z_re,Z_im,dZ_re,dZ_im");
    CHECK(rows == t.rows);

    const auto j = nlohmann::json::parse(format_table(t, TableFormat::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(j[i]["x"].get<double>() == t.rows[i][0]);
        CHECK(j[i]["dZ_im"].get<double>() == t.rows[i][4]);
    }
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("figure data") {
    const auto figs = figure_tables();
    REQUIRE(figs.size() == 4);
    const auto& wp = figs[0].table;
    const auto& wm = figs[1].table;
    const auto& vp = figs[2].table;
    const auto& vm = figs[3].table;
    CHECK(figs[0].name == "fig1_w_m+1.csv");
    CHECK(figs[3].name == "fig2_vminus_m2.csv");
    for (const auto& f : figs) {
        CHECK(f.table.rows.size() == kFigurePoints);
        CHECK(f.table.rows.front()[0] == kFigureXMin);
        CHECK(f.table.rows.back()[0] == kFigureXMax);
    }
    bool monotone = true;
    for (std::size_t i = 0; i < wp.rows.size(); ++i) {
        CHECK(wp.rows[i][1] < 0.0);
        CHECK(wm.rows[i][1] > 0.0);
        CHECK(wp.rows[i][1] == -wm.rows[i][1]);
        CHECK(vp.rows[i][1] > 0.0);
        if (i > 0) {
            monotone = monotone && vp.rows[i][1] < vp.rows[i - 1][1];
        }
    }
    CHECK(monotone);
    // V- for m = 2 is negative up to x = 1/16 and peaks at 9/64.
    auto it_max = std::max_element(vm.rows.begin(), vm.rows.end(), [](auto& a, auto& b) { return a[1] < b[1]; });
    const double dx = (kFigureXMax - kFigureXMin) / (kFigurePoints - 1);
    CHECK(std::abs((*it_max)[0] - 9.0 / 64.0) <= dx);
    CHECK((*it_max)[1] > 0.0);
    for (const auto& row : vm.rows) {
        if (row[0] < 1.0 / 16.0 - 1e-12) {
            CHECK(row[1] < 0.0);
        } else if (row[0] > 1.0 / 16.0 + 1e-12) {
            CHECK(row[1] > 0.0);
        }
    }
}

TEST_CASE("write_figures") {
    const auto dir = std::filesystem::temp_directory_path() / "susy_ces_test_figs";
    std::filesystem::create_directories(dir);
    const auto paths = write_figures(dir, 50);
    REQUIRE(paths.size() == 4);
    for (const auto& p : paths) {
        CHECK(std::filesystem::exists(p));
    }
    std::ifstream f(paths[2]);
    std::string header;
    std::getline(f, header);
    CHECK(header == "x,V");
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(write_figures(dir / "missing"), std::runtime_error);
}

}
