#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "canal/config.hpp"

namespace canal {

/// Process exit codes of the tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitDomain = 2,
    kExitIntegration = 3,
    kExitVerification = 4,
};

/// Command-line overrides applied on top of the config.
struct CommandOptions {
    std::optional<double> step;
    std::optional<Branch> branch;
    std::optional<std::pair<int, int>> grid;
    std::filesystem::path out_dir = ".";
    bool timestamp = true;
    bool use_printed_forms = false;
};

struct CommandResult {
    int exit_code = kExitOk;
    nlohmann::json report;  ///< also written to <out_dir>/<output.json>
};

/// Regime at every grid cell centre plus a closed-vs-numeric audit summary.
CommandResult cmd_classify(const RunConfig& config, const CommandOptions& opts);

/// Integrates the loxodrome; writes the CSV polyline and the JSON summary.
CommandResult cmd_solve(const RunConfig& config, const CommandOptions& opts);

/// OBJ mesh of the surface plus one CSV per configured meridian.
CommandResult cmd_sample(const RunConfig& config, const CommandOptions& opts);

/// Pass/fail per configured check with measured residuals.
CommandResult cmd_verify(const RunConfig& config, const CommandOptions& opts);

/// Dispatches on "classify", "solve", "sample" or "verify". Library errors are
/// mapped to exit codes and reported in the JSON.
CommandResult run_command(const std::string& command, const RunConfig& config,
                          const CommandOptions& opts);

/// "NUxNV" -> (nu, nv); nullopt when malformed.
std::optional<std::pair<int, int>> parse_grid(const std::string& s);

}  // namespace canal
