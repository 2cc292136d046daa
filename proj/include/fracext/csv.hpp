#pragma once

#include <charconv>
#include <system_error>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "point.hpp"

namespace fracext {

/// Shortest decimal form that reads back to the same double.
inline std::string full_precision(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline std::string coordinate_header(int n, bool with_y) {
    std::string h;
    for (int i = 1; i <= n; ++i) h += "x_" + std::to_string(i) + ",";
    if (with_y) h += "y,";
    return h + "value";
}

/** @brief Writes columns x_1..x_n,y,value with one row per grid node. */
inline void emit_field_csv(const ExtensionField& u, std::ostream& os) {
    u.validate();
    const int n = u.x_grid.front().dim;
    os << coordinate_header(n, true) << '\n';
    for (size_t i = 0; i < u.nx(); ++i)
        for (size_t j = 0; j < u.ny(); ++j) {
            for (int k = 0; k < n; ++k) os << full_precision(u.x_grid[i][k]) << ',';
            os << full_precision(u.y_grid[j]) << ',' << full_precision(u(i, j)) << '\n';
        }
}

inline void emit_field_csv(const ExtensionField& u, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    emit_field_csv(u, os);
    os.flush();
    if (!os) throw IoError("write to '" + path + "' failed");
}

/** @brief Writes columns x_1..x_n,value for point evaluations. */
inline void emit_points_csv(const std::vector<Point>& xs, const std::vector<double>& values, std::ostream& os) {
    if (xs.size() != values.size()) throw DomainError("emit_points_csv: point and value counts differ");
    if (xs.empty()) return;
    os << coordinate_header(xs.front().dim, false) << '\n';
    for (size_t i = 0; i < xs.size(); ++i) {
        for (int k = 0; k < xs[i].dim; ++k) os << full_precision(xs[i][k]) << ',';
        os << full_precision(values[i]) << '\n';
    }
}

inline void emit_points_csv(const std::vector<Point>& xs, const std::vector<double>& values, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    emit_points_csv(xs, values, os);
    os.flush();
    if (!os) throw IoError("write to '" + path + "' failed");
}

/** @brief A parsed CSV file: the header names and numeric rows. */
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "' for reading");
    CsvTable t;
    std::string line, cell;
    if (!std::getline(is, line)) throw IoError("'" + path + "' is empty");
    std::stringstream hs(line);
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) {
            double v = 0.0;
            const char* end = cell.data() + cell.size();
            const auto res = std::from_chars(cell.data(), end, v);
            if (res.ec != std::errc{} || res.ptr != end) throw IoError("'" + path + "': bad number '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.header.size()) throw IoError("'" + path + "': row width does not match the header");
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace fracext
