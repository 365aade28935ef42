#include "tricoh/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "tricoh/errors.hpp"

namespace tricoh {

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

using Block = std::map<std::string, Entry, std::less<>>;

const std::array<std::string_view, 11> kKnownKeys = {
    "state", "p", "topology", "memory", "eta", "lambda", "kbt", "t_max", "n_points", "engine", "output"};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(trim(item));
    return items;
}

[[noreturn]] void fail(const std::string& what, int line, std::string_view field) {
    std::ostringstream msg;
    msg << "line " << line;
    if (!field.empty()) msg << ", field '" << field << "'";
    msg << ": " << what;
    throw ParseError(msg.str(), line, std::string(field));
}

double parse_number(const std::string& text, int line, std::string_view field) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value) || text.empty()) {
        fail("malformed number '" + text + "'", line, field);
    }
    return value;
}

int parse_integer(const std::string& text, int line, std::string_view field) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        fail("malformed integer '" + text + "'", line, field);
    }
    return value;
}

const Entry* lookup(const Block& block, const Block& defaults, std::string_view key) {
    if (auto it = block.find(key); it != block.end()) return &it->second;
    if (auto it = defaults.find(key); it != defaults.end()) return &it->second;
    return nullptr;
}

std::vector<ScenarioConfig> expand(const Block& block, const Block& defaults, int block_line) {
    auto required = [&](std::string_view key) -> const Entry& {
        const Entry* e = lookup(block, defaults, key);
        if (!e) fail("missing required field", block_line, key);
        return *e;
    };

    const Entry& state_entry = required("state");
    StateName name{};
    try {
        name = parse_state_name(state_entry.value);
    } catch (const DomainError&) {
        fail("unknown state name '" + state_entry.value + "'", state_entry.line, "state");
    }

    std::vector<double> ps{1.0};
    if (const Entry* e = lookup(block, defaults, "p"); e && is_mixture(name)) {
        ps.clear();
        for (const std::string& item : split_list(e->value)) {
            const double p = parse_number(item, e->line, "p");
            if (!(p >= 0.0 && p <= 1.0)) fail("p = " + item + " outside [0, 1]", e->line, "p");
            ps.push_back(p);
        }
    } else if (is_mixture(name)) {
        fail("mixed state needs a mixing probability", block_line, "p");
    }

    std::vector<Topology> topologies;
    const Entry& topo_entry = required("topology");
    for (const std::string& item : split_list(topo_entry.value)) {
        try {
            topologies.push_back(parse_topology(item));
        } catch (const DomainError&) {
            fail("unknown topology '" + item + "'", topo_entry.line, "topology");
        }
    }
    std::vector<Memory> memories;
    const Entry& mem_entry = required("memory");
    for (const std::string& item : split_list(mem_entry.value)) {
        try {
            memories.push_back(parse_memory(item));
        } catch (const DomainError&) {
            fail("unknown memory mode '" + item + "'", mem_entry.line, "memory");
        }
    }

    BathSpec bath;
    auto number = [&](std::string_view key, double& target) {
        if (const Entry* e = lookup(block, defaults, key)) target = parse_number(e->value, e->line, key);
    };
    number("eta", bath.eta);
    number("lambda", bath.lambda_cutoff);
    number("kbt", bath.kbt);
    if (const Entry* e = lookup(block, defaults, "eta"); e && !(bath.eta >= 0.0))
        fail("eta must be >= 0", e->line, "eta");
    if (const Entry* e = lookup(block, defaults, "lambda"); e && !(bath.lambda_cutoff > 0.0))
        fail("lambda must be > 0", e->line, "lambda");
    if (const Entry* e = lookup(block, defaults, "kbt"); e && !(bath.kbt > 0.0))
        fail("kbt must be > 0", e->line, "kbt");

    std::optional<double> t_max;
    if (const Entry* e = lookup(block, defaults, "t_max")) {
        t_max = parse_number(e->value, e->line, "t_max");
        if (!(*t_max > 0.0)) fail("t_max must be > 0", e->line, "t_max");
    }
    int n_points = kDefaultPoints;
    if (const Entry* e = lookup(block, defaults, "n_points")) {
        n_points = parse_integer(e->value, e->line, "n_points");
        if (n_points < 2) fail("n_points must be >= 2", e->line, "n_points");
    }
    Engine engine = Engine::closed_form;
    if (const Entry* e = lookup(block, defaults, "engine")) {
        try {
            engine = parse_engine(e->value);
        } catch (const DomainError&) {
            fail("unknown engine '" + e->value + "'", e->line, "engine");
        }
    }

    std::vector<ScenarioConfig> out;
    for (double p : ps) {
        for (Topology topology : topologies) {
            for (Memory memory : memories) {
                ScenarioConfig c;
                c.state = {name, p};
                c.bath = bath;
                c.bath.topology = topology;
                c.bath.memory = memory;
                c.t_max = t_max.value_or(memory == Memory::markov ? kMarkovWindow : kNonMarkovWindow);
                c.n_points = n_points;
                c.engine = engine;
                c.output = default_output_name(c.state, c.bath);
                out.push_back(c);
            }
        }
    }
    if (const Entry* e = lookup(block, defaults, "output")) {
        if (out.size() != 1) fail("output path given for a sweep of several scenarios", e->line, "output");
        out.front().output = e->value;
    }
    return out;
}

}  // namespace

void ScenarioConfig::validate() const {
    state.validate();
    bath.validate();
    if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
    if (n_points < 2) throw DomainError("n_points must be >= 2");
}

std::filesystem::path default_output_name(const StateSpec& state, const BathSpec& bath) {
    std::string name(to_string(state.name));
    if (is_mixture(state.name)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "_p%g", state.p);
        name += buf;
    }
    name += "_";
    name += to_string(bath.topology);
    name += "_";
    name += to_string(bath.memory);
    name += ".csv";
    return name;
}

std::vector<ScenarioConfig> parse_config(std::string_view text) {
    Block defaults;
    std::vector<std::pair<Block, int>> blocks;
    std::optional<std::pair<Block, int>> open;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line == "}") {
            if (!open) fail("unmatched '}'", line_no, "");
            blocks.push_back(*open);
            open.reset();
            continue;
        }
        if (line.ends_with("{")) {
            const std::string head = trim(line.substr(0, line.size() - 1));
            if (head != "scenario") fail("unknown block '" + head + "'", line_no, "");
            if (open) fail("nested scenario blocks are not allowed", line_no, "");
            open.emplace(Block{}, line_no);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'", line_no, "");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            fail("unknown key", line_no, key);
        }
        if (value.empty()) fail("empty value", line_no, key);
        Block& target = open ? open->first : defaults;
        if (target.contains(key)) fail("duplicate key", line_no, key);
        target[key] = Entry{value, line_no};
    }
    if (open) fail("unterminated scenario block", open->second, "");

    if (blocks.empty() && defaults.contains("state")) {
        return expand(Block{}, defaults, 1);
    }
    std::vector<ScenarioConfig> out;
    for (const auto& [block, line] : blocks) {
        std::vector<ScenarioConfig> expanded = expand(block, defaults, line);
        out.insert(out.end(), expanded.begin(), expanded.end());
    }
    return out;
}

}  // namespace tricoh
