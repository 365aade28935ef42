#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricoh/config.hpp"
#include "tricoh/coherence_trace.hpp"

namespace tricoh {

/// Comment header, `gamma0_t,C_R`, then one row per sample with 9 significant digits, LF endings.
std::string format_csv(const CoherenceTrace& trace);
void write_csv(const std::filesystem::path& path, const CoherenceTrace& trace);

struct ScenarioResult {
    ScenarioConfig config;
    std::optional<CoherenceTrace> trace;
    std::string error;  // empty on success

    bool ok() const { return error.empty(); }
};

struct RunOptions {
    std::filesystem::path out_dir = ".";
    unsigned threads = 1;
    bool write_files = true;
};

struct RunReport {
    std::vector<ScenarioResult> results;  // config order

    bool ok() const;
};

/// Computes one trace per config, concurrently across scenarios, and writes each CSV under
/// out_dir. Failures are recorded per scenario; the rest of the batch still runs.
RunReport run_scenarios(const std::vector<ScenarioConfig>& configs, const RunOptions& options);

CoherenceTrace compute_trace(const ScenarioConfig& config);

enum class Figure { fig2a, fig2b, fig2c, fig2d, fig3, fig4, fig5 };

std::string_view to_string(Figure figure);
Figure parse_figure(std::string_view id);

/// The scenario set behind one figure. Outputs are placed under a directory named after it.
std::vector<ScenarioConfig> figure_scenarios(Figure figure, int n_points = kDefaultPoints,
                                             Engine engine = Engine::closed_form);

}  // namespace tricoh
