#include "vacfield_cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <ios>
#include <stdexcept>
#include <system_error>

namespace vacfield::cli {

void OutputTable::validate() const {
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw std::invalid_argument("row length does not match the column count");
        for (const Cell& c : row)
            if (c && !std::isfinite(*c))
                throw std::invalid_argument("table contains a non-finite value");
    }
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    if (res.ec != std::errc())
        throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

void write_csv(const OutputTable& table, std::ostream& sink) {
    table.validate();
    std::string text;
    for (const auto& c : table.comments) {
        text += "# ";
        text += c;
        text += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            text += ',';
        text += table.columns[i];
    }
    text += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                text += ',';
            if (row[i])
                text += format_number(*row[i]);
        }
        text += '\n';
    }
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    sink.flush();
    if (!sink)
        throw std::ios_base::failure("failed to write CSV output");
}

} // namespace vacfield::cli
