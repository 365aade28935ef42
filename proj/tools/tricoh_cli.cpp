// Command-line front end: run scenario files, regenerate figure data, list states.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tricoh/config.hpp"
#include "tricoh/errors.hpp"
#include "tricoh/runner.hpp"

namespace {

const char* describe(tricoh::StateName name) {
    using tricoh::StateName;
    switch (name) {
        case StateName::ghz: return "(|000> + |111>)/sqrt2";
        case StateName::w: return "(|100> + |010> + |001>)/sqrt3";
        case StateName::wbar: return "(|011> + |101> + |110>)/sqrt3";
        case StateName::wwbar: return "(|W> + |Wbar>)/sqrt2";
        case StateName::star: return "(|000> + |100> + |101> + |111>)/2, qubit 3 central";
        case StateName::ghz_w_mix: return "p|GHZ><GHZ| + (1-p)|W><W|";
        case StateName::werner_ghz: return "p|GHZ><GHZ| + (1-p) I/8";
        case StateName::werner_w: return "p|W><W| + (1-p) I/8";
    }
    return "";
}

int report(const tricoh::RunReport& rep, const std::filesystem::path& out_dir) {
    int failures = 0;
    for (const tricoh::ScenarioResult& r : rep.results) {
        if (r.ok()) {
            std::cout << "wrote " << (out_dir / r.config.output).string() << "\n";
        } else {
            ++failures;
            std::cerr << "FAILED " << r.config.output.string() << ": " << r.error << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Three-qubit coherence dynamics under dephasing environments"};
    app.require_subcommand(1);

    std::filesystem::path out_dir = ".";
    std::string engine_name;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    int points = 0;
    app.add_option("--out-dir", out_dir, "Directory for CSV output");
    app.add_option("--engine", engine_name, "Override the engine")
        ->check(CLI::IsMember({"closed-form", "ode"}));
    app.add_option("--threads", threads, "Scenarios computed concurrently")->check(CLI::PositiveNumber);
    app.add_option("--points", points, "Override the number of grid points")->check(CLI::Range(2, 1000000));

    auto* run = app.add_subcommand("run", "Run every scenario in a config file");
    std::string config_path;
    run->add_option("config", config_path, "Scenario document")->required()->check(CLI::ExistingFile);

    auto* reproduce = app.add_subcommand("reproduce", "Regenerate the data behind one figure");
    std::string figure_id;
    reproduce->add_option("figure", figure_id, "fig2a|fig2b|fig2c|fig2d|fig3|fig4|fig5")
        ->required()
        ->check(CLI::IsMember({"fig2a", "fig2b", "fig2c", "fig2d", "fig3", "fig4", "fig5"}));

    auto* list = app.add_subcommand("list-states", "Print the available initial states");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (tricoh::StateName s : tricoh::all_state_names()) {
                std::cout << tricoh::to_string(s) << "\t" << describe(s) << "\n";
            }
            return 0;
        }

        std::vector<tricoh::ScenarioConfig> configs;
        if (run->parsed()) {
            std::ifstream in(config_path);
            std::stringstream buf;
            buf << in.rdbuf();
            configs = tricoh::parse_config(buf.str());
        } else {
            configs = tricoh::figure_scenarios(tricoh::parse_figure(figure_id));
        }
        for (tricoh::ScenarioConfig& c : configs) {
            if (!engine_name.empty()) c.engine = tricoh::parse_engine(engine_name);
            if (points > 0) c.n_points = points;
        }

        tricoh::RunOptions options;
        options.out_dir = out_dir;
        options.threads = threads;
        return report(tricoh::run_scenarios(configs, options), out_dir);
    } catch (const tricoh::ParseError& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
