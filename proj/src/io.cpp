#include "beamvar/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace beamvar {

namespace {

void check_columns(const std::vector<std::vector<double>>& columns) {
    for (const auto& col : columns)
        if (col.size() != columns.front().size())
            throw std::invalid_argument("columns must share one length");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

}  // namespace

std::string format_full(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size())
        throw std::invalid_argument("one name per column required");
    if (columns.empty()) throw std::invalid_argument("no columns");
    check_columns(columns);
    auto out = open_out(path);
    for (std::size_t j = 0; j < names.size(); ++j)
        out << (j ? "," : "") << names[j];
    out << '\n';
    for (std::size_t i = 0; i < columns.front().size(); ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j)
            out << (j ? "," : "") << format_full(columns[j][i]);
        out << '\n';
    }
}

void write_dat(const std::string& path,
               const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) throw std::invalid_argument("no columns");
    check_columns(columns);
    auto out = open_out(path);
    for (std::size_t i = 0; i < columns.front().size(); ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j)
            out << (j ? " " : "") << format_full(columns[j][i]);
        out << '\n';
    }
}

void write_text(const std::string& path, const std::string& content) {
    open_out(path) << content;
}

}  // namespace beamvar
