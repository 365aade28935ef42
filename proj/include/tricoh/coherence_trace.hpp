#pragma once

#include <string_view>
#include <vector>

#include "tricoh/bath.hpp"
#include "tricoh/states.hpp"

namespace tricoh {

enum class Engine { closed_form, ode };

std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view name);

struct CoherenceSample {
    double gamma0_t;
    double c_r;  // nats
};

/// Relative entropy of coherence against dimensionless time gamma_0 t.
struct CoherenceTrace {
    StateSpec state;
    BathSpec bath;
    Engine engine = Engine::closed_form;
    std::vector<CoherenceSample> samples;

    /// gamma0_t strictly increasing and c_r >= -1e-10.
    bool well_formed() const;
};

}  // namespace tricoh
