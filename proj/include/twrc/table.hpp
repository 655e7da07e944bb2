// table.hpp -- column-ordered CSV result tables with deterministic byte
// output: header row mandatory, LF line endings, floats at 9 significant
// digits.

#ifndef TWRC_TABLE_HPP
#define TWRC_TABLE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace twrc {

using Cell = std::variant<double, std::int64_t, std::string>;

class ResultTable {
public:
    explicit ResultTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<Cell> row);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }

    std::string to_csv() const;
    // Writes the fully rendered table in one shot; a failed computation never
    // leaves a partial file behind because rendering happens first.
    void write_csv(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_cell(const Cell& cell);

} // namespace twrc

#endif // TWRC_TABLE_HPP
