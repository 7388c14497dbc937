#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace vacfield::cli {

/// A missing cell is written as an empty field (used where a quantity is
/// undefined at a sample, e.g. the ideal-conductor law at the wall itself).
using Cell = std::optional<double>;

struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> comments;  // written as "# <line>"

    /// Throws std::invalid_argument on a ragged row or a non-finite value.
    void validate() const;
};

/// Scientific notation with 17 significant digits (round-trips every double),
/// independent of the global locale.
std::string format_number(double v);

/// Comments, header, rows; '\n' line endings. Throws std::ios_base::failure
/// if the sink goes bad.
void write_csv(const OutputTable& table, std::ostream& sink);

} // namespace vacfield::cli
