// csvio.cpp — CSV/SVG writers.

#include "eqq/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eqq {

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string quench_csv(const QuenchRecord& rec) {
    std::ostringstream out;
    out << "t_gamma01,distance\n";
    for (std::size_t i = 0; i < rec.times.size(); ++i) {
        out << format_g17(rec.times[i]) << ',' << format_g17(rec.distances[i])
            << '\n';
    }
    return out.str();
}

std::string phase_csv(const PhaseDiagram& diagram) {
    std::ostringstream out;
    out << "x,y,measure,verdict,gap\n";
    for (const CellResult& cell : diagram.cells) {
        for (std::size_t k = 0; k < diagram.spec.measures.size(); ++k) {
            out << format_g17(cell.x) << ',' << format_g17(cell.y) << ','
                << measure_name(diagram.spec.measures[k]) << ',';
            if (!cell.error.empty()) {
                out << "Error,\n";
            } else {
                out << verdict_name(cell.verdicts[k].kind) << ','
                    << format_g17(cell.verdicts[k].gap) << '\n';
            }
        }
    }
    return out.str();
}

std::string boundary_csv(Measure m, const BoundaryResult& result) {
    std::ostringstream out;
    out << "measure,x,y\n";
    for (const auto& [x, y] : result.points) {
        out << measure_name(m) << ',' << format_g17(x) << ',' << format_g17(y)
            << '\n';
    }
    return out.str();
}

namespace {

const char* measure_color(Measure m) {
    switch (m) {
        case Measure::KL: return "#d62728";            // red
        case Measure::Trace: return "#000000";         // black
        case Measure::ReversedKL: return "#ff7f0e";    // orange
        case Measure::SymmetrizedKL: return "#2ca02c"; // green
    }
    return "#888888";
}

// Cell fill from the cross-measure verdict pattern: all uphill-faster,
// all downhill-faster, mixed, or symmetric/error.
const char* cell_color(const CellResult& cell) {
    if (!cell.error.empty() || cell.verdicts.empty()) return "#d9d9d9";
    bool any_up = false;
    bool any_down = false;
    for (const Verdict& v : cell.verdicts) {
        if (v.kind == VerdictKind::UphillFaster) any_up = true;
        if (v.kind == VerdictKind::DownhillFaster) any_down = true;
    }
    if (any_up && any_down) return "#9467bd"; // disagreement region
    if (any_up) return "#aec7e8";
    if (any_down) return "#ffbb78";
    return "#f0f0f0"; // symmetric everywhere
}

} // namespace

std::string phase_svg(
    const PhaseDiagram& diagram,
    const std::vector<std::pair<Measure, BoundaryResult>>& boundaries) {
    const SweepSpec& spec = diagram.spec;
    const double width = 640.0;
    const double height = 640.0;
    const double margin = 60.0;
    const double plot_w = width - 2 * margin;
    const double plot_h = height - 2 * margin;

    const double x_span = spec.x_max > spec.x_min ? spec.x_max - spec.x_min : 1.0;
    const double y_span = spec.y_max > spec.y_min ? spec.y_max - spec.y_min : 1.0;
    auto px = [&](double x) { return margin + (x - spec.x_min) / x_span * plot_w; };
    auto py = [&](double y) { return height - margin - (y - spec.y_min) / y_span * plot_h; };

    const double cell_w = plot_w / std::max(1, spec.nx - 1);
    const double cell_h = plot_h / std::max(1, spec.ny - 1);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (const CellResult& cell : diagram.cells) {
        out << "<rect x=\"" << px(cell.x) - 0.5 * cell_w << "\" y=\""
            << py(cell.y) - 0.5 * cell_h << "\" width=\"" << cell_w
            << "\" height=\"" << cell_h << "\" fill=\"" << cell_color(cell)
            << "\"/>\n";
    }

    for (const auto& [m, result] : boundaries) {
        if (result.points.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << measure_color(m)
            << "\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : result.points) {
            out << px(x) << ',' << py(y) << ' ';
        }
        out << "\"/>\n";
    }

    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-size=\"16\">Gamma02 / Gamma01</text>\n";
    out << "<text x=\"18\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 18 "
        << height / 2 << ")\">Gamma12 / Gamma01</text>\n";
    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("write_file: cannot open " + path);
    }
    out << content;
    if (!out) {
        throw NumericalError("write_file: failed writing " + path);
    }
}

} // namespace eqq
