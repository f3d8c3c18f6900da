// phasemap.cpp — rate-ratio plane sweep and boundary extraction.

#include "eqq/phasemap.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqq {

namespace {

void require_valid(const SweepSpec& spec) {
    if (spec.energies.size() != 3) {
        throw ValidationError("sweep: expected a three-level energy list");
    }
    if (spec.nx < 1 || spec.ny < 1) {
        throw ValidationError("sweep: grid must be nonempty");
    }
    if (spec.x_min < 0.0 || spec.y_min < 0.0 || spec.x_max < spec.x_min ||
        spec.y_max < spec.y_min) {
        throw ValidationError("sweep: rate ratios must be >= 0 and ordered");
    }
    if (spec.measures.empty()) {
        throw ValidationError("sweep: at least one measure required");
    }
    if (!(spec.t_eval_units > 0.0)) {
        throw ValidationError("sweep: t_eval must be > 0");
    }
}

LevelSystem cell_system(const SweepSpec& spec, double x, double y) {
    // Gamma01 = 1 fixes the time unit; x and y are the dimensionless ratios.
    return three_level(spec.energies[1], spec.energies[2], spec.beta, 1.0, x, y);
}

// The equidistant pairs depend only on the energies and temperatures, never
// on the rates, so they are shared by every cell of the sweep.
std::vector<EquidistantPair> sweep_pairs(const SweepSpec& spec) {
    // Any connected rate assignment works for the t = 0 search.
    const LevelSystem probe = cell_system(spec, 1.0, 1.0);
    std::vector<EquidistantPair> pairs;
    pairs.reserve(spec.measures.size());
    if (spec.pairing == Pairing::FixedPair) {
        const EquidistantPair fixed =
            find_equidistant_pair(probe, spec.fixed_measure, spec.target);
        for (std::size_t k = 0; k < spec.measures.size(); ++k) {
            pairs.push_back(fixed);
        }
    } else {
        for (const Measure m : spec.measures) {
            pairs.push_back(find_equidistant_pair(probe, m, spec.target));
        }
    }
    return pairs;
}

CellResult run_cell(const SweepSpec& spec,
                    const std::vector<EquidistantPair>& pairs, int ix, int iy) {
    CellResult cell;
    cell.x = spec.x_at(ix);
    cell.y = spec.y_at(iy);
    try {
        const LevelSystem sys = cell_system(spec, cell.x, cell.y);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const double t_eval = spec.t_eval_units / sys.canonical_rate();
        cell.verdicts.reserve(spec.measures.size());
        for (std::size_t k = 0; k < spec.measures.size(); ++k) {
            cell.verdicts.push_back(classify_with(dec, sys, pairs[k],
                                                  spec.measures[k], t_eval,
                                                  spec.sym_tol));
        }
    } catch (const std::exception& e) {
        cell.verdicts.clear();
        cell.error = e.what();
    }
    return cell;
}

double unanimous_fraction(const PhaseDiagram& diagram) {
    std::size_t valid = 0;
    std::size_t unanimous = 0;
    for (const CellResult& cell : diagram.cells) {
        if (!cell.error.empty()) continue;
        ++valid;
        const VerdictKind first = cell.verdicts.front().kind;
        const bool all_same =
            std::all_of(cell.verdicts.begin(), cell.verdicts.end(),
                        [&](const Verdict& v) { return v.kind == first; });
        if (all_same) ++unanimous;
    }
    return valid == 0 ? 0.0
                      : static_cast<double>(unanimous) / static_cast<double>(valid);
}

} // namespace

double SweepSpec::x_at(int ix) const {
    if (nx == 1) return x_min;
    return x_min + (x_max - x_min) * static_cast<double>(ix) / (nx - 1);
}

double SweepSpec::y_at(int iy) const {
    if (ny == 1) return y_min;
    return y_min + (y_max - y_min) * static_cast<double>(iy) / (ny - 1);
}

PhaseDiagram sweep_serial(const SweepSpec& spec) {
    require_valid(spec);
    const std::vector<EquidistantPair> pairs = sweep_pairs(spec);

    PhaseDiagram diagram;
    diagram.spec = spec;
    diagram.cells.resize(static_cast<std::size_t>(spec.nx) * spec.ny);
    for (int iy = 0; iy < spec.ny; ++iy) {
        for (int ix = 0; ix < spec.nx; ++ix) {
            diagram.cells[static_cast<std::size_t>(iy) * spec.nx + ix] =
                run_cell(spec, pairs, ix, iy);
        }
    }
    diagram.unanimous_fraction = unanimous_fraction(diagram);
    return diagram;
}

PhaseDiagram sweep(const SweepSpec& spec, int jobs) {
    if (jobs <= 1) return sweep_serial(spec);
    require_valid(spec);
    const std::vector<EquidistantPair> pairs = sweep_pairs(spec);

    PhaseDiagram diagram;
    diagram.spec = spec;
    const std::size_t total = static_cast<std::size_t>(spec.nx) * spec.ny;
    diagram.cells.resize(total);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
    for (long flat = 0; flat < static_cast<long>(total); ++flat) {
        const int iy = static_cast<int>(flat / spec.nx);
        const int ix = static_cast<int>(flat % spec.nx);
        diagram.cells[static_cast<std::size_t>(flat)] =
            run_cell(spec, pairs, ix, iy);
    }

    diagram.unanimous_fraction = unanimous_fraction(diagram);
    return diagram;
}

BoundaryResult boundary(const SweepSpec& spec, Measure m,
                        const std::vector<double>& y_values) {
    require_valid(spec);

    // Locate the requested measure's pair once.
    SweepSpec one = spec;
    one.measures = {m};
    const std::vector<EquidistantPair> pairs = sweep_pairs(one);
    const EquidistantPair& pair = pairs.front();

    auto gap_at = [&](double x, double y) {
        const LevelSystem sys = cell_system(spec, x, y);
        const SpectralDecomposition dec = decompose(build_superoperator(sys));
        const double t_eval = spec.t_eval_units / sys.canonical_rate();
        // Raw gap, bypassing the symmetry band.
        return classify_with(dec, sys, pair, m, t_eval, 0.0).gap;
    };

    BoundaryResult result;
    for (double y : y_values) {
        try {
            double lo = spec.x_min;
            double hi = spec.x_max;
            double g_lo = gap_at(lo, y);
            const double g_hi = gap_at(hi, y);
            if (g_lo == 0.0) {
                result.points.emplace_back(lo, y);
                continue;
            }
            if (g_hi == 0.0) {
                result.points.emplace_back(hi, y);
                continue;
            }
            if ((g_lo > 0.0) == (g_hi > 0.0)) {
                result.skipped_y.push_back(y); // NoSignChange
                continue;
            }
            const double scale = std::max(std::abs(g_lo), std::abs(g_hi));
            double mid = 0.5 * (lo + hi);
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                mid = 0.5 * (lo + hi);
                const double g_mid = gap_at(mid, y);
                if (std::abs(g_mid) <= 1e-10 * scale) break;
                if ((g_mid > 0.0) == (g_lo > 0.0)) {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            result.points.emplace_back(mid, y);
        } catch (const std::exception&) {
            result.skipped_y.push_back(y);
        }
    }
    return result;
}

} // namespace eqq
