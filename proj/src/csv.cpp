#include "spectra/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace spectra {

std::string format_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void emit_csv(const ResultTable& table, const std::string& path) {
    if (table.columns.empty() || table.rows.empty()) {
        throw std::invalid_argument("emit_csv: empty table");
    }
    std::string buf;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) buf += ',';
        buf += table.columns[i];
    }
    buf += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument("emit_csv: row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) buf += ',';
            if (const double* num = std::get_if<double>(&row[i])) {
                buf += format_sig9(*num);
            } else {
                buf += std::get<std::string>(row[i]);
            }
        }
        buf += '\n';
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot write '" + path + "'");
    out << buf;
    out.flush();
    if (!out) throw std::runtime_error("emit_csv: write to '" + path + "' failed");
}

}  // namespace spectra
