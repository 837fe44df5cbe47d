#include "susyces/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "susyces/error.hpp"

namespace susyces {

std::vector<double> make_grid(double x_min, double x_max, int points, Spacing spacing)
{
    if (!(x_min > 0.0) || !(x_max > x_min) || !std::isfinite(x_max)) {
        std::ostringstream os;
        os << "need 0 < x_min < x_max (got " << x_min << ", " << x_max << ")";
        throw Error(ErrorCode::InvalidParams, os.str());
    }
    if (points < 2) {
        throw Error(ErrorCode::InvalidParams, "need at least 2 points");
    }
    std::vector<double> xs(static_cast<std::size_t>(points));
    const double n = points - 1;
    for (int i = 0; i < points; ++i) {
        const double t = i / n;
        if (spacing == Spacing::Linear) {
            xs[i] = x_min + (x_max - x_min) * t;
        } else {
            xs[i] = x_min * std::exp(std::log(x_max / x_min) * t);
        }
    }
    xs.front() = x_min;
    xs.back() = x_max;
    return xs;
}

Table build_table(const TableRequest& req)
{
    const auto xs = make_grid(req.x_min, req.x_max, req.points, req.spacing);
    if (req.m == 0.0 || !std::isfinite(req.m)) {
        throw Error(ErrorCode::InvalidParams, "m must be nonzero");
    }
    Table t;
    t.rows.reserve(xs.size());
    switch (req.kind) {
    case TableKind::Superpotential:
        t.columns = {"x", "W"};
        for (double x : xs) {
            t.rows.push_back({x, superpotential(x, req.m)});
        }
        break;
    case TableKind::Potential:
        t.columns = {"x", "V"};
        for (double x : xs) {
            t.rows.push_back({x, potential(x, {req.m, req.sector})});
        }
        break;
    case TableKind::Solution:
        t.columns = {"x", "Z_re", "Z_im", "dZ_re", "dZ_im"};
        for (double x : xs) {
            const auto s = solution_Z(req.branch, req.sector, x, req.m, req.omega);
            t.rows.push_back({x, s.z.real(), s.z.imag(), s.dz.real(), s.dz.imag()});
        }
        break;
    }
    return t;
}

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_table(const Table& t, TableFormat format)
{
    std::string out;
    if (format == TableFormat::Csv) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out += (c ? "," : "") + t.columns[c];
        }
        out += '\n';
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) {
                    out += ',';
                }
                out += format_number(row[c]);
            }
            out += '\n';
        }
        return out;
    }
    out += "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out += (c ? ", \"" : "\"") + t.columns[c] + "\": " + format_number(t.rows[r][c]);
        }
        out += "}";
    }
    out += t.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

std::vector<FigureFile> figure_tables(int points)
{
    TableRequest w;
    w.kind = TableKind::Superpotential;
    w.x_min = kFigureXMin;
    w.x_max = kFigureXMax;
    w.points = points;

    std::vector<FigureFile> out;
    w.m = 1.0;
    out.push_back({"fig1_w_m+1.csv", build_table(w)});
    w.m = -1.0;
    out.push_back({"fig1_w_m-1.csv", build_table(w)});

    TableRequest v = w;
    v.kind = TableKind::Potential;
    v.m = 2.0;
    v.sector = Sector::Plus;
    out.push_back({"fig2_vplus_m2.csv", build_table(v)});
    v.sector = Sector::Minus;
    out.push_back({"fig2_vminus_m2.csv", build_table(v)});
    return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.close();
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

std::vector<std::filesystem::path> write_figures(const std::filesystem::path& dir, int points)
{
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir.string());
    }
    std::vector<std::filesystem::path> paths;
    for (const auto& fig : figure_tables(points)) {
        const auto p = dir / fig.name;
        write_text_file(p, format_table(fig.table, TableFormat::Csv));
        paths.push_back(p);
    }
    return paths;
}

std::string_view to_string(TableKind k)
{
    switch (k) {
    case TableKind::Superpotential:
        return "superpotential";
    case TableKind::Potential:
        return "potential";
    case TableKind::Solution:
        return "solution";
    }
    return "?";
}

}  // namespace susyces
