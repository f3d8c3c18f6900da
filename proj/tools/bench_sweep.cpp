// bench_sweep.cpp — times the serial reference sweep against the OpenMP
// kernel on the same grid and verifies the outputs agree byte for byte.
//
// Usage: bench_sweep [N] [JOBS]   (default 31x31 grid, 4 jobs)

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "eqq/csvio.hpp"
#include "eqq/phasemap.hpp"

using namespace eqq;

namespace {

template <typename F>
double time_s(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    SweepSpec spec;
    spec.nx = spec.ny = argc > 1 ? std::atoi(argv[1]) : 31;
    const int jobs = argc > 2 ? std::atoi(argv[2]) : 4;
    spec.measures = {Measure::KL, Measure::Trace, Measure::ReversedKL,
                     Measure::SymmetrizedKL};

    std::cout << "grid " << spec.nx << "x" << spec.ny << ", "
              << spec.measures.size() << " measures, jobs=" << jobs << "\n";

    PhaseDiagram serial;
    PhaseDiagram parallel;
    const double t_serial = time_s([&] { serial = sweep_serial(spec); });
    const double t_parallel = time_s([&] { parallel = sweep(spec, jobs); });

    std::cout << "serial reference: " << t_serial << " s\n";
    std::cout << "openmp (" << jobs << " jobs): " << t_parallel << " s\n";
    std::cout << "speedup: " << t_serial / t_parallel << "x\n";

    if (phase_csv(serial) != phase_csv(parallel)) {
        std::cout << "MISMATCH: parallel output differs from the reference\n";
        return 1;
    }
    std::cout << "outputs byte-identical\n";
    return 0;
}
