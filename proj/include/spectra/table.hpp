#pragma once

#include <string>
#include <variant>
#include <vector>

namespace spectra {

// Row-oriented result table handed from the scenario drivers to the CSV
// and chart emitters. Cells are numbers or text (policy names).
struct ResultTable {
    using Cell = std::variant<double, std::string>;

    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Index of a named column; -1 if absent.
    int column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (columns[i] == name) return static_cast<int>(i);
        }
        return -1;
    }
};

}  // namespace spectra
