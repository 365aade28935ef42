#include "tricoh/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include "tricoh/dynamics.hpp"
#include "tricoh/errors.hpp"

namespace tricoh {

namespace {

std::string sig9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

struct Panel {
    Topology topology;
    Memory memory;
};

constexpr std::array<Panel, 4> kPanels = {{{Topology::common, Memory::markov},
                                           {Topology::local, Memory::markov},
                                           {Topology::common, Memory::non_markov},
                                           {Topology::local, Memory::non_markov}}};

ScenarioConfig panel_scenario(StateSpec state, Panel panel, int n_points, Engine engine,
                              std::string_view dir) {
    ScenarioConfig c;
    c.state = state;
    c.bath.topology = panel.topology;
    c.bath.memory = panel.memory;
    c.t_max = panel.memory == Memory::markov ? kMarkovWindow : kNonMarkovWindow;
    c.n_points = n_points;
    c.engine = engine;
    c.output = std::filesystem::path(dir) / default_output_name(state, c.bath);
    return c;
}

}  // namespace

std::string format_csv(const CoherenceTrace& trace) {
    std::string out;
    out += "# state=" + std::string(to_string(trace.state.name)) + "\n";
    out += "# p=" + (is_mixture(trace.state.name) ? sig9(trace.state.p) : std::string("none")) + "\n";
    out += "# topology=" + std::string(to_string(trace.bath.topology)) + "\n";
    out += "# memory=" + std::string(to_string(trace.bath.memory)) + "\n";
    out += "# eta=" + sig9(trace.bath.eta) + "\n";
    out += "# lambda=" + sig9(trace.bath.lambda_cutoff) + "\n";
    out += "# kbt=" + sig9(trace.bath.kbt) + "\n";
    out += "# engine=" + std::string(to_string(trace.engine)) + "\n";
    out += "gamma0_t,C_R\n";
    for (const CoherenceSample& s : trace.samples) {
        out += sig9(s.gamma0_t) + "," + sig9(s.c_r) + "\n";
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const CoherenceTrace& trace) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << format_csv(trace);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

bool RunReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const ScenarioResult& r) { return r.ok(); });
}

CoherenceTrace compute_trace(const ScenarioConfig& config) {
    config.validate();
    PropagatorSpec spec;
    spec.bath = config.bath;
    spec.engine = config.engine;
    const std::vector<double> grid = uniform_grid(config.t_max, config.n_points);
    return coherence_trace(spec, config.state, grid);
}

RunReport run_scenarios(const std::vector<ScenarioConfig>& configs, const RunOptions& options) {
    RunReport report;
    report.results.resize(configs.size());

    std::set<std::filesystem::path> seen;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        report.results[i].config = configs[i];
        if (!seen.insert(configs[i].output.lexically_normal()).second) {
            report.results[i].error = "duplicate output path " + configs[i].output.string();
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            ScenarioResult& r = report.results[i];
            if (!r.ok()) continue;
            try {
                r.trace = compute_trace(configs[i]);
                if (options.write_files) write_csv(options.out_dir / configs[i].output, *r.trace);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
    };

    const unsigned n_threads =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(configs.size())));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    return report;
}

std::string_view to_string(Figure figure) {
    switch (figure) {
        case Figure::fig2a: return "fig2a";
        case Figure::fig2b: return "fig2b";
        case Figure::fig2c: return "fig2c";
        case Figure::fig2d: return "fig2d";
        case Figure::fig3: return "fig3";
        case Figure::fig4: return "fig4";
        case Figure::fig5: return "fig5";
    }
    return "?";
}

Figure parse_figure(std::string_view id) {
    for (Figure f : {Figure::fig2a, Figure::fig2b, Figure::fig2c, Figure::fig2d, Figure::fig3,
                     Figure::fig4, Figure::fig5}) {
        if (to_string(f) == id) return f;
    }
    throw DomainError("unknown figure id '" + std::string(id) + "'");
}

std::vector<ScenarioConfig> figure_scenarios(Figure figure, int n_points, Engine engine) {
    const std::string_view dir = to_string(figure);
    std::vector<ScenarioConfig> out;
    auto pure_panel = [&](Panel panel) {
        for (StateName s : {StateName::ghz, StateName::w, StateName::wwbar, StateName::star})
            out.push_back(panel_scenario({s, 1.0}, panel, n_points, engine, dir));
    };
    auto mixed = [&](StateName s) {
        for (Panel panel : kPanels)
            for (double p : {0.1, 0.5, 0.9})
                out.push_back(panel_scenario({s, p}, panel, n_points, engine, dir));
    };
    switch (figure) {
        case Figure::fig2a: pure_panel(kPanels[0]); break;
        case Figure::fig2b: pure_panel(kPanels[1]); break;
        case Figure::fig2c: pure_panel(kPanels[2]); break;
        case Figure::fig2d: pure_panel(kPanels[3]); break;
        case Figure::fig3: mixed(StateName::ghz_w_mix); break;
        case Figure::fig4: mixed(StateName::werner_ghz); break;
        case Figure::fig5: mixed(StateName::werner_w); break;
    }
    return out;
}

}  // namespace tricoh
