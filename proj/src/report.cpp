#include "quadsum/report.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace quadsum::harness {

void ResultTable::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size()) {
        throw std::invalid_argument("row width " + std::to_string(cells.size()) +
                                    " does not match " + std::to_string(columns.size()) +
                                    " columns");
    }
    rows.push_back(std::move(cells));
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

std::string render_csv(const ResultTable& table) {
    std::string out;
    for (const auto& line : table.metadata) {
        out += "# ";
        out += line;
        out += '\n';
    }
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (std::holds_alternative<double>(row[c])) {
                out += format_double(std::get<double>(row[c]));
            } else {
                out += std::get<std::string>(row[c]);
            }
        }
        out += '\n';
    }
    return out;
}

void emit_report(const ResultTable& table, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    std::string body = render_csv(table);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!file) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

}  // namespace quadsum::harness
