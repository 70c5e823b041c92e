#pragma once

#include <string>

#include "spectra/table.hpp"

namespace spectra {

// Number formatting used in result CSVs: 9 significant digits.
std::string format_sig9(double v);

// UTF-8 CSV: snake_case header row, one line per record, newline
// terminated. Emission is a pure function of the table, so re-emitting
// the same table is byte-identical. Throws std::invalid_argument on an
// empty table and std::runtime_error on I/O failure.
void emit_csv(const ResultTable& table, const std::string& path);

}  // namespace spectra
