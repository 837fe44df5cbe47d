#pragma once

// Tabulation of W, V and Z on linear or logarithmic grids, and the fixed set
// of figure data files. Numbers are printed with 17 significant digits so the
// text round-trips exactly and identical requests give identical bytes.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "susyces/closedform.hpp"

namespace susyces {

enum class TableKind { Superpotential, Potential, Solution };
enum class Spacing { Linear, Log };
enum class TableFormat { Csv, Json };

struct TableRequest {
    TableKind kind = TableKind::Potential;
    double m = 1.0;
    Sector sector = Sector::Plus;
    double omega = 1.0;
    Branch branch = Branch::I;
    double x_min = 0.1;
    double x_max = 1.0;
    int points = 100;
    Spacing spacing = Spacing::Linear;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Grid of `points` abscissae; both ends are hit exactly.
[[nodiscard]] std::vector<double> make_grid(double x_min, double x_max, int points, Spacing spacing);

[[nodiscard]] Table build_table(const TableRequest& req);

/// "%.17g".
[[nodiscard]] std::string format_number(double v);

/// CSV: header row, LF endings, no quoting needed. JSON: array of flat objects.
[[nodiscard]] std::string format_table(const Table& t, TableFormat format);

struct FigureFile {
    std::string name;
    Table table;
};

inline constexpr double kFigureXMin = 0.02;
inline constexpr double kFigureXMax = 5.0;
inline constexpr int kFigurePoints = 2000;

/// fig1_w_m+1, fig1_w_m-1, fig2_vplus_m2, fig2_vminus_m2 over [0.02, 5].
[[nodiscard]] std::vector<FigureFile> figure_tables(int points = kFigurePoints);

/// Writes each figure table as CSV into `dir` (which must exist) and returns the paths.
std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, int points = kFigurePoints);

/// Writes `text` to `path`; throws std::runtime_error if the file cannot be written.
void write_text_file(const std::filesystem::path& path, std::string_view text);

[[nodiscard]] std::string_view to_string(TableKind k);

}  // namespace susyces
