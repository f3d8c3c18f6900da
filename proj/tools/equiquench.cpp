// equiquench.cpp — command-line front end: evolve, equidistant,
// quench-compare, phase-diagram, validate.
//
// Exit codes: 0 success, 1 validation-suite failure, 2 input validation,
// 3 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqq/csvio.hpp"
#include "eqq/phasemap.hpp"
#include "eqq/quench.hpp"
#include "eqq/validation.hpp"

namespace fs = std::filesystem;
using namespace eqq;

namespace {

LevelSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open system file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed system JSON (" + path + "): " + e.what());
    }
    return LevelSystem::from_json(j);
}

std::vector<Measure> parse_measures(const std::string& list) {
    std::vector<Measure> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_measure(tok));
    }
    if (out.empty()) {
        throw ValidationError("no measures given");
    }
    return out;
}

// "XMIN:XMAX:NX,YMIN:YMAX:NY"
void parse_grid(const std::string& text, SweepSpec& spec) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ValidationError("grid spec must be XMIN:XMAX:NX,YMIN:YMAX:NY");
    }
    auto parse_axis = [](const std::string& axis, double& lo, double& hi,
                         int& n) {
        std::stringstream ss(axis);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
            !std::getline(ss, c, ':')) {
            throw ValidationError("grid axis must be MIN:MAX:N, got " + axis);
        }
        try {
            lo = std::stod(a);
            hi = std::stod(b);
            n = std::stoi(c);
        } catch (const std::exception&) {
            throw ValidationError("grid axis must be numeric, got " + axis);
        }
    };
    parse_axis(text.substr(0, comma), spec.x_min, spec.x_max, spec.nx);
    parse_axis(text.substr(comma + 1), spec.y_min, spec.y_max, spec.ny);
}

void ensure_out_dir(const std::string& out) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) {
        throw ValidationError("cannot create output directory " + out + ": " +
                              ec.message());
    }
}

std::string out_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

int cmd_evolve(const std::string& system_path, double beta0, double r,
               double phi, const std::string& measures, double tmax_units,
               int samples, const std::string& out) {
    const LevelSystem sys = load_system(system_path);
    const std::vector<Measure> ms = parse_measures(measures);
    if (!(tmax_units > 0.0)) {
        throw ValidationError("--tmax must be > 0");
    }
    ensure_out_dir(out);

    DensityMatrix rho0 = r > 0.0 ? coherent_state(sys, {beta0, r, phi})
                                 : thermal_state(sys, beta0);
    std::ostringstream label;
    label << "beta0=" << beta0;
    if (r > 0.0) label << " r=" << r << " phi=" << phi;

    const double t_max = tmax_units / sys.canonical_rate();
    for (const Measure m : ms) {
        const QuenchRecord rec =
            run_quench(sys, rho0, m, t_max, samples, label.str());
        const std::string path =
            out_path(out, "evolve_" + measure_name(m) + ".csv");
        write_file(path, quench_csv(rec));
        std::cout << "wrote " << path << " (" << rec.times.size() << " rows)\n";
    }
    return 0;
}

int cmd_equidistant(const std::string& system_path, const std::string& measures,
                    double target, const std::string& out) {
    const LevelSystem sys = load_system(system_path);
    const std::vector<Measure> ms = parse_measures(measures);
    ensure_out_dir(out);

    for (const Measure m : ms) {
        const std::string tag = measure_name(m);
        const EquidistantPair pair = find_equidistant_pair(sys, m, target);
        std::cout << "beta0_hot_" << tag << '=' << format_g17(pair.beta0_hot)
                  << " beta0_cold_" << tag << '=' << format_g17(pair.beta0_cold)
                  << " target_" << tag << '=' << format_g17(target) << '\n';

        if (sys.size() == 2) {
            // Locus between the thermal roots; the r = 0 distance exceeds
            // D* outside them.
            std::vector<double> grid;
            const int n = 101;
            for (int k = 0; k < n; ++k) {
                grid.push_back(pair.beta0_hot +
                               (pair.beta0_cold - pair.beta0_hot) * k / (n - 1));
            }
            const auto locus = coherence_locus(sys, m, target, grid);
            std::ostringstream csv;
            csv << "beta0,r\n";
            for (const auto& [b0, r] : locus) {
                csv << format_g17(b0) << ',' << format_g17(r) << '\n';
            }
            const std::string path = out_path(out, "locus_" + tag + ".csv");
            write_file(path, csv.str());
            // Highlight the fully-coherent point at beta0 = beta.
            const auto at_beta = coherence_locus(sys, m, target, {sys.beta()});
            if (!at_beta.empty()) {
                std::cout << "r_at_beta_" << tag << '='
                          << format_g17(at_beta.front().second) << '\n';
            }
            std::cout << "wrote " << path << " (" << locus.size() << " rows)\n";
        }
    }
    return 0;
}

int cmd_quench_compare(const std::string& system_path,
                       const std::string& measures, double target,
                       double t_eval_units, const std::string& out) {
    const LevelSystem sys = load_system(system_path);
    const std::vector<Measure> ms = parse_measures(measures);
    ensure_out_dir(out);

    const SpectralDecomposition dec = decompose(build_superoperator(sys));
    const double t_eval = t_eval_units / sys.canonical_rate();

    for (const Measure m : ms) {
        const std::string tag = measure_name(m);
        const EquidistantPair pair = find_equidistant_pair(sys, m, target);
        const Verdict v = classify_with(dec, sys, pair, m, t_eval);
        std::cout << "beta0_hot_" << tag << '=' << format_g17(pair.beta0_hot)
                  << " beta0_cold_" << tag << '='
                  << format_g17(pair.beta0_cold) << '\n';
        std::cout << "verdict_" << tag << '=' << verdict_name(v.kind)
                  << " gap_" << tag << '=' << format_g17(v.gap)
                  << " t_eval=" << format_g17(t_eval_units) << '\n';

        if (sys.size() == 2) {
            TwoLevelParams p;
            p.omega0 = sys.omega0();
            p.beta = sys.beta();
            p.gamma01 = sys.canonical_rate();
            p.delta = sys.dephasing();
            const RegimeReport rep = regime_report(p, m, target, t_eval_units);
            std::cout << "regime_" << tag << '=' << regime_name(rep.regime)
                      << " delta=" << format_g17(rep.delta)
                      << " delta_c=" << format_g17(rep.delta_c) << '\n';
            auto join = [](const std::vector<Candidate>& cs) {
                std::string s;
                for (const Candidate c : cs) {
                    if (!s.empty()) s += '+';
                    s += candidate_name(c);
                }
                return s;
            };
            std::cout << "predicted_fastest_" << tag << '='
                      << join(rep.predicted_fastest) << " observed_fastest_"
                      << tag << '=' << join(rep.observed_fastest)
                      << " verified_" << tag << '='
                      << (rep.verified ? "1" : "0") << '\n';
        }
    }
    return 0;
}

int cmd_phase_diagram(const std::string& system_path, const std::string& grid,
                      const std::string& measures, double target,
                      double t_eval_units, const std::string& pairing,
                      int jobs, const std::string& out, bool svg) {
    const LevelSystem sys = load_system(system_path);
    if (sys.size() != 3) {
        throw ValidationError("phase-diagram requires a three-level system");
    }
    SweepSpec spec;
    spec.energies = sys.energies();
    spec.beta = sys.beta();
    spec.measures = parse_measures(measures);
    spec.target = target;
    spec.t_eval_units = t_eval_units;
    parse_grid(grid, spec);
    if (pairing == "per-measure") {
        spec.pairing = Pairing::PerMeasure;
    } else if (pairing == "fixed-kl") {
        spec.pairing = Pairing::FixedPair;
        spec.fixed_measure = Measure::KL;
    } else {
        throw ValidationError("--pairing must be per-measure or fixed-kl");
    }
    if (jobs < 1) {
        throw ValidationError("--jobs must be >= 1");
    }
    ensure_out_dir(out);

    const PhaseDiagram diagram = sweep(spec, jobs);
    const std::string grid_path = out_path(out, "phase.csv");
    write_file(grid_path, phase_csv(diagram));
    std::cout << "wrote " << grid_path << " (" << diagram.cells.size()
              << " cells)\n";
    std::cout << "unanimous_fraction="
              << format_g17(diagram.unanimous_fraction) << '\n';

    std::vector<std::pair<Measure, BoundaryResult>> bounds;
    if (spec.nx > 1) {
        std::vector<double> y_values;
        for (int iy = 0; iy < spec.ny; ++iy) y_values.push_back(spec.y_at(iy));
        for (const Measure m : spec.measures) {
            BoundaryResult res = boundary(spec, m, y_values);
            const std::string path =
                out_path(out, "boundary_" + measure_name(m) + ".csv");
            write_file(path, boundary_csv(m, res));
            std::cout << "wrote " << path << " (" << res.points.size()
                      << " points, " << res.skipped_y.size() << " rows skipped)\n";
            bounds.emplace_back(m, std::move(res));
        }
    }

    if (svg) {
        const std::string path = out_path(out, "phase.svg");
        write_file(path, phase_svg(diagram, bounds));
        std::cout << "wrote " << path << '\n';
    }
    return 0;
}

int cmd_validate() {
    bool all = true;
    for (const SuiteResult& res : run_all_suites()) {
        all = all && res.passed;
        std::cout << "suite=" << res.name
                  << " status=" << (res.passed ? "PASS" : "FAIL")
                  << " worst=" << format_g17(res.worst)
                  << " tol=" << format_g17(res.tolerance);
        if (!res.detail.empty()) std::cout << "  # " << res.detail;
        std::cout << '\n';
    }
    std::cout << (all ? "all validation suites passed\n"
                      : "validation suite failure\n");
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal relaxation of few-level open quantum systems: "
                 "equidistant quenches, relaxation asymmetry, phase diagrams"};
    app.require_subcommand(1);

    std::string system_path;
    std::string measures = "kl";
    std::string out = ".";
    double target = 0.1;
    double beta0 = 0.0;
    double r = 0.0;
    double phi = 0.0;
    double tmax = 10.0;
    int samples = 200;
    double t_eval = 10.0;
    std::string grid = "0:3:61,0:3:61";
    std::string pairing = "per-measure";
    int jobs = 1;
    bool svg = false;

    CLI::App* evolve = app.add_subcommand(
        "evolve", "Propagate one initial state and record distance curves");
    evolve->add_option("--system", system_path, "system JSON path")->required();
    evolve->add_option("--beta0", beta0, "initial inverse temperature")
        ->required();
    evolve->add_option("--r", r, "initial coherence (two-level)");
    evolve->add_option("--phi", phi, "coherence phase");
    evolve->add_option("--measure", measures, "comma list: kl,trace,revkl,symkl");
    evolve->add_option("--tmax", tmax, "final time in units of 1/Gamma01");
    evolve->add_option("--samples", samples, "geometric samples after t = 0");
    evolve->add_option("--out", out, "output directory");

    CLI::App* equi = app.add_subcommand(
        "equidistant", "Find hot/cold equidistant states and the coherence locus");
    equi->add_option("--system", system_path, "system JSON path")->required();
    equi->add_option("--measure", measures, "comma list of measures");
    equi->add_option("--distance", target, "target initial distance D*");
    equi->add_option("--out", out, "output directory");

    CLI::App* compare = app.add_subcommand(
        "quench-compare", "Classify uphill/downhill relaxation for a pair");
    compare->add_option("--system", system_path, "system JSON path")->required();
    compare->add_option("--measure", measures, "comma list of measures");
    compare->add_option("--distance", target, "target initial distance D*");
    compare->add_option("--t-eval", t_eval,
                        "comparison time in units of 1/Gamma01");
    compare->add_option("--out", out, "output directory");

    CLI::App* phase = app.add_subcommand(
        "phase-diagram", "Sweep the three-level rate-ratio plane");
    phase->add_option("--system", system_path, "system JSON path")->required();
    phase->add_option("--grid", grid, "XMIN:XMAX:NX,YMIN:YMAX:NY");
    phase->add_option("--measure", measures, "comma list of measures");
    phase->add_option("--distance", target, "target initial distance D*");
    phase->add_option("--t-eval", t_eval, "comparison time in units of 1/Gamma01");
    phase->add_option("--pairing", pairing, "per-measure | fixed-kl");
    phase->add_option("--jobs", jobs, "worker count (output is independent)");
    phase->add_option("--out", out, "output directory");
    phase->add_flag("--svg", svg, "also render phase.svg");

    app.add_subcommand("validate", "Run the oracle and property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (evolve->parsed()) {
            return cmd_evolve(system_path, beta0, r, phi, measures, tmax,
                              samples, out);
        }
        if (equi->parsed()) {
            return cmd_equidistant(system_path, measures, target, out);
        }
        if (compare->parsed()) {
            return cmd_quench_compare(system_path, measures, target, t_eval,
                                      out);
        }
        if (phase->parsed()) {
            return cmd_phase_diagram(system_path, grid, measures, target,
                                     t_eval, pairing, jobs, out, svg);
        }
        return cmd_validate();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
