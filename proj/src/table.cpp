// table.cpp

#include "twrc/table.hpp"
#include "twrc/errors.hpp"

#include <cstdio>
#include <fstream>

namespace twrc {

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size())
        throw ValidationError("table: row width " + std::to_string(row.size()) +
                              " does not match header width " + std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string format_cell(const Cell& cell) {
    if (std::holds_alternative<double>(cell)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.9g", std::get<double>(cell));
        return buf;
    }
    if (std::holds_alternative<std::int64_t>(cell))
        return std::to_string(std::get<std::int64_t>(cell));
    return std::get<std::string>(cell);
}

std::string ResultTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i)
            out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

void ResultTable::write_csv(const std::string& path) const {
    const std::string rendered = to_csv();
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ValidationError("table: cannot open \"" + path + "\" for writing");
    out.write(rendered.data(), static_cast<std::streamsize>(rendered.size()));
    if (!out)
        throw ValidationError("table: write failed for \"" + path + "\"");
}

} // namespace twrc
