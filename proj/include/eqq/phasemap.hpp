// phasemap.hpp — Sweep of the three-level rate-ratio plane: per-cell
// relaxation-asymmetry verdicts per measure, phase-boundary extraction, and
// the cross-measure agreement statistic.
//
// The sweep kernel is data-parallel over grid cells. sweep_serial is the
// reference implementation; sweep runs the same cell kernel under OpenMP
// and must produce bitwise-identical results for any worker count (cells
// are written by index, and per-cell arithmetic is identical).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqq/quench.hpp"

namespace eqq {

enum class Pairing { PerMeasure, FixedPair };

struct SweepSpec {
    std::vector<double> energies{0.0, 1.0, 2.0}; // eps_0 = 0, eps_1, eps_2
    double beta = 1.0;
    double x_min = 0.0, x_max = 3.0; // x = Gamma02 / Gamma01
    int nx = 61;
    double y_min = 0.0, y_max = 3.0; // y = Gamma12 / Gamma01
    int ny = 61;
    double target = 0.1; // D*
    std::vector<Measure> measures{Measure::KL, Measure::Trace};
    Pairing pairing = Pairing::PerMeasure;
    Measure fixed_measure = Measure::KL; // pair-defining measure in FixedPair mode
    double t_eval_units = 10.0;          // comparison time in units of 1/Gamma01
    double sym_tol = kSymmetryTol;

    double x_at(int ix) const;
    double y_at(int iy) const;
};

struct CellResult {
    double x = 0.0;
    double y = 0.0;
    std::vector<Verdict> verdicts; // parallel to spec.measures; empty on error
    std::string error;             // nonempty when the cell failed
};

struct PhaseDiagram {
    SweepSpec spec;
    std::vector<CellResult> cells; // row-major: iy * nx + ix
    // Fraction of non-error cells whose verdict kind is identical across
    // all requested measures.
    double unanimous_fraction = 0.0;
};

// Serial reference sweep.
PhaseDiagram sweep_serial(const SweepSpec& spec);

// OpenMP sweep over cells; jobs <= 1 falls back to the serial reference.
PhaseDiagram sweep(const SweepSpec& spec, int jobs);

struct BoundaryResult {
    std::vector<std::pair<double, double>> points; // (x, y), ordered by y
    std::vector<double> skipped_y;                 // rows without a sign change
};

// Per-row bisection in x for gap(x) = 0 under measure m; rows where the gap
// does not change sign across [x_min, x_max] are recorded and skipped.
BoundaryResult boundary(const SweepSpec& spec, Measure m,
                        const std::vector<double>& y_values);

} // namespace eqq
