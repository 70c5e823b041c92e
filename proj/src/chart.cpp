#include "spectra/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace spectra {

namespace {

struct Axes {
    std::string x_column, y_column, x_label, y_label, title;
    bool per_policy = false;
};

Axes axes_for(ChartKind kind) {
    switch (kind) {
        case ChartKind::rate_vs_distance:
            return {"distance_m", "mean_secrecy_rate", "eavesdropper-ST distance (m)",
                    "mean secrecy rate (bits)", "Secrecy rate vs eavesdropper distance",
                    false};
        case ChartKind::jamming_vs_distance:
            return {"distance_m", "mean_p_j_mw", "eavesdropper-ST distance (m)",
                    "mean jamming power (mW)", "Jamming power vs eavesdropper distance",
                    false};
        case ChartKind::alphabeta_vs_distance:
            return {"distance_m", "mean_alpha_beta", "eavesdropper-ST distance (m)",
                    "mean cooperation fraction (alpha*beta)",
                    "Cooperation phase vs eavesdropper distance", false};
        case ChartKind::unreliable_vs_time:
            return {"window_end_slot", "p_unreliable", "window end slot",
                    "P(selected SU is unreliable)",
                    "Unreliable selection probability over time", true};
    }
    throw std::logic_error("unreachable chart kind");
}

double numeric_cell(const ResultTable::Cell& cell, const std::string& column) {
    if (const double* v = std::get_if<double>(&cell)) return *v;
    throw std::invalid_argument("chart: column '" + column + "' holds non-numeric data");
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Tick step of the form {1,2,5} * 10^k giving 4..8 ticks over the span.
double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0) return mag;
    if (norm <= 2.0) return 2.0 * mag;
    if (norm <= 5.0) return 5.0 * mag;
    return 10.0 * mag;
}

}  // namespace

void emit_chart(const ResultTable& table, ChartKind kind, const std::string& path) {
    const Axes ax = axes_for(kind);
    const int xi = table.column_index(ax.x_column);
    const int yi = table.column_index(ax.y_column);
    const int si = ax.per_policy ? table.column_index("policy") : -1;
    if (xi < 0 || yi < 0 || (ax.per_policy && si < 0)) {
        throw std::invalid_argument("chart: table columns do not match kind (need '" +
                                    ax.x_column + "', '" + ax.y_column +
                                    (ax.per_policy ? "', 'policy'" : "'") + ")");
    }
    if (table.rows.empty()) throw std::invalid_argument("chart: empty table");

    struct Series {
        std::string name;
        std::vector<std::pair<double, double>> points;
    };
    std::vector<Series> series;
    for (const auto& row : table.rows) {
        const double x = numeric_cell(row[static_cast<std::size_t>(xi)], ax.x_column);
        const double y = numeric_cell(row[static_cast<std::size_t>(yi)], ax.y_column);
        std::string name;
        if (ax.per_policy) {
            const auto& cell = row[static_cast<std::size_t>(si)];
            if (const std::string* s = std::get_if<std::string>(&cell)) {
                name = *s;
            } else {
                throw std::invalid_argument("chart: policy column holds non-text data");
            }
        }
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const Series& s) { return s.name == name; });
        if (it == series.end()) {
            series.push_back({name, {}});
            it = std::prev(series.end());
        }
        it->points.emplace_back(x, y);
    }

    double x_min = series[0].points[0].first, x_max = x_min;
    double y_min = series[0].points[0].second, y_max = y_min;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }

    const double width = 640, height = 420;
    const double ml = 72, mr = 24, mt = 36, mb = 56;
    const double pw = width - ml - mr, ph = height - mt - mb;
    const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    const auto py = [&](double y) { return mt + ph - (y - y_min) / (y_max - y_min) * ph; };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    const int n_colors = 6;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" font-family=\"sans-serif\" "
           "font-size=\"14\" text-anchor=\"middle\">" << ax.title << "</text>\n";

    // gridlines + tick labels
    const double xstep = nice_step(x_max - x_min);
    const double ystep = nice_step(y_max - y_min);
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double t = std::ceil(x_min / xstep) * xstep; t <= x_max + 1e-9 * xstep;
         t += xstep) {
        const double gx = px(t);
        svg << "<line x1=\"" << fmt(gx) << "\" y1=\"" << mt << "\" x2=\"" << fmt(gx)
            << "\" y2=\"" << mt + ph << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(gx) << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    for (double t = std::ceil(y_min / ystep) * ystep; t <= y_max + 1e-9 * ystep;
         t += ystep) {
        const double gy = py(t);
        svg << "<line x1=\"" << ml << "\" y1=\"" << fmt(gy) << "\" x2=\"" << ml + pw
            << "\" y2=\"" << fmt(gy) << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << ml - 6 << "\" y=\"" << fmt(gy + 4)
            << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }
    svg << "</g>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
        << ax.x_label << "</text>\n";
    svg << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " << mt + ph / 2 << ")\">" << ax.y_label
        << "</text>\n";

    // series
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = palette[s % n_colors];
        std::ostringstream pts;
        for (const auto& [x, y] : series[s].points) {
            pts << fmt(px(x)) << "," << fmt(py(y)) << " ";
        }
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.8\" points=\"" << pts.str() << "\"/>\n";
        if (series[s].points.size() <= 32) {  // markers clutter dense series
            for (const auto& [x, y] : series[s].points) {
                svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
                    << "\" r=\"2.4\" fill=\"" << color << "\"/>\n";
            }
        }
    }

    // legend, only when there is more than one named series
    if (series.size() > 1) {
        double ly = mt + 14;
        for (std::size_t s = 0; s < series.size(); ++s) {
            const char* color = palette[s % n_colors];
            const double lx = ml + pw - 150;
            svg << "<line x1=\"" << lx << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
                << lx + 26 << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
                << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << lx + 32 << "\" y=\"" << fmt(ly)
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[s].name
                << "</text>\n";
            ly += 18;
        }
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_chart: cannot write '" + path + "'");
    out << svg.str();
    out.flush();
    if (!out) throw std::runtime_error("emit_chart: write to '" + path + "' failed");
}

}  // namespace spectra
