#pragma once

#include <string>
#include <vector>

#include "surftrap/config.hpp"
#include "surftrap/table.hpp"

namespace surftrap {

/// Subcommand names accepted by run_subcommand and the CLI.
const std::vector<std::string>& subcommand_names();

/// Executes one subcommand pipeline on a validated configuration and returns
/// the result table. Identical inputs produce identical tables regardless of
/// cfg.threads. Unknown names throw ValidationError.
ResultTable run_subcommand(const std::string& name, const ScenarioConfig& cfg);

/// As above, additionally writing the rendered CSV to output_path (empty
/// path skips the write).
ResultTable run_subcommand(const std::string& name, const ScenarioConfig& cfg,
                           const std::string& output_path);

} // namespace surftrap
