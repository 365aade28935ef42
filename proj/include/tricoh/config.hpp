#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "tricoh/bath.hpp"
#include "tricoh/coherence_trace.hpp"
#include "tricoh/states.hpp"

namespace tricoh {

inline constexpr int kDefaultPoints = 201;
inline constexpr double kMarkovWindow = 3.0;      // gamma_0 t
inline constexpr double kNonMarkovWindow = 0.2;   // gamma_0 t

struct ScenarioConfig {
    StateSpec state;
    BathSpec bath;
    double t_max = kMarkovWindow;  // in gamma_0 t
    int n_points = kDefaultPoints;
    Engine engine = Engine::closed_form;
    std::filesystem::path output;  // relative to the run's output directory

    void validate() const;
};

/// Default CSV name: <state>[_p<p>]_<topology>_<memory>.csv
std::filesystem::path default_output_name(const StateSpec& state, const BathSpec& bath);

/// Parses a scenario document.
///
///     # top-level keys are defaults for every block
///     eta = 0.1
///     scenario {
///       state = werner-w
///       p = 0.1, 0.5, 0.9
///       topology = common, local
///       memory = markov
///     }
///
/// Keys: state, p, topology, memory, eta, lambda, kbt, t_max, n_points, engine, output.
/// p, topology and memory may be comma-separated lists; each block expands to the cross
/// product. A document without blocks but with a top-level `state` is a single block.
/// Errors raise ParseError with the line and field.
std::vector<ScenarioConfig> parse_config(std::string_view text);

}  // namespace tricoh
