#pragma once

#include <string>

#include "spectra/table.hpp"

namespace spectra {

enum class ChartKind {
    rate_vs_distance,
    jamming_vs_distance,
    alphabeta_vs_distance,
    unreliable_vs_time,
};

// Self-contained static SVG line chart (axes, tick labels, one polyline
// per series -- the policy column for unreliable_vs_time, a single series
// otherwise). Derives solely from the table, so identical tables produce
// byte-identical files. Throws std::invalid_argument when the table lacks
// the columns the kind requires.
void emit_chart(const ResultTable& table, ChartKind kind, const std::string& path);

}  // namespace spectra
