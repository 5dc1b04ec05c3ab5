#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace quadsum::harness {

// Rectangular table with named columns and a metadata header. Cells are
// numbers or labels; numbers render with 17 significant digits so a CSV
// round trip is exact.
struct ResultTable {
    using Cell = std::variant<double, std::string>;

    std::vector<std::string> metadata;  // emitted as '# ...' lines
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

std::string format_double(double v);  // %.17g equivalent via to_chars

std::string render_csv(const ResultTable& table);

// Writes render_csv(table) with LF line endings; failures carry the path.
void emit_report(const ResultTable& table, const std::filesystem::path& path);

}  // namespace quadsum::harness
