// csvio.hpp — CSV and SVG serialization for quench records and phase
// diagrams. CSV is the single interchange format; all floating-point values
// are written with 17 significant digits so files are diffable and
// bit-stable across runs.

#pragma once

#include <string>

#include "eqq/phasemap.hpp"
#include "eqq/quench.hpp"

namespace eqq {

// Shortest round-trippable decimal form (17 significant digits).
std::string format_g17(double value);

// Header `t_gamma01,distance`, one row per sample.
std::string quench_csv(const QuenchRecord& rec);

// Header `x,y,measure,verdict,gap`, cells in row-major grid order with the
// measure index varying fastest. Error cells carry verdict `Error` and an
// empty gap field.
std::string phase_csv(const PhaseDiagram& diagram);

// Header `measure,x,y`.
std::string boundary_csv(Measure m, const BoundaryResult& result);

// Minimal static rendering: colored cells (region A / B / C / symmetric)
// plus one boundary polyline per measure.
std::string phase_svg(const PhaseDiagram& diagram,
                      const std::vector<std::pair<Measure, BoundaryResult>>&
                          boundaries = {});

void write_file(const std::string& path, const std::string& content);

} // namespace eqq
