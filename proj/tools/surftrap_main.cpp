#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surftrap/config.hpp"
#include "surftrap/run.hpp"

namespace {

void print_error_json(const std::string& code, const std::string& message) {
    nlohmann::json j;
    j["error"] = code;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

struct SubArgs {
    std::string config_path;
    std::string out_path;
    std::vector<std::string> sets;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surftrap: combined magnetic + evanescent-wave surface-trap toolkit"};
    app.require_subcommand(1);

    std::vector<std::pair<std::string, SubArgs*>> pending;
    std::vector<SubArgs> storage(surftrap::subcommand_names().size());

    std::size_t idx = 0;
    for (const auto& name : surftrap::subcommand_names()) {
        SubArgs* args = &storage[idx++];
        CLI::App* sub = app.add_subcommand(name, "write the " + name + " CSV table");
        sub->add_option("--config", args->config_path,
                        "scenario file; omitted sections fall back to the paper-fig2 preset")
            ->check(CLI::ExistingFile);
        sub->add_option("--out", args->out_path, "output CSV path")->required();
        sub->add_option("--set", args->sets, "override, repeatable: section.key=value");
        pending.emplace_back(name, args);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error_json("UsageError", e.what());
        return 2;
    }

    for (const auto& [name, args] : pending) {
        if (!app.get_subcommand(name)->parsed()) continue;
        try {
            surftrap::ScenarioConfig cfg = args->config_path.empty()
                                               ? surftrap::paper_fig2_preset()
                                               : surftrap::load_config(args->config_path);
            std::vector<std::pair<std::string, std::string>> overrides;
            for (const auto& kv : args->sets) {
                const std::size_t eq = kv.find('=');
                if (eq == std::string::npos) {
                    throw surftrap::ParseError("--set expects section.key=value, got '" +
                                               kv + "'");
                }
                overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
            }
            surftrap::apply_overrides(cfg, overrides);
            surftrap::run_subcommand(name, cfg, args->out_path);
        } catch (const surftrap::Error& e) {
            print_error_json(e.code(), e.what());
            return 1;
        } catch (const std::exception& e) {
            print_error_json("InternalError", e.what());
            return 1;
        }
    }
    return 0;
}
