// Command-line front end: canal_loxo <config.json> <classify|solve|sample|verify> [flags]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "canal/commands.hpp"
#include "canal/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Loxodromes on canal surfaces in Minkowski 3-space"};
    std::string config_path;
    std::string command;
    std::optional<double> step;
    std::string branch;
    std::string grid;
    std::string out_dir = ".";
    bool no_timestamp = false;
    bool printed = false;

    app.add_option("config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    app.add_option("command", command, "classify | solve | sample | verify")
        ->required()
        ->check(CLI::IsMember({"classify", "solve", "sample", "verify"}));
    app.add_option("--step", step, "integrator step in u (overrides the config)");
    app.add_option("--branch", branch, "initial root: plus | minus")->check(CLI::IsMember({"plus", "minus"}));
    app.add_option("--grid", grid, "mesh / classification grid as NUxNV");
    app.add_option("--out-dir", out_dir, "directory for CSV, OBJ and JSON outputs");
    app.add_flag("--no-timestamp", no_timestamp, "omit generated_at from JSON reports");
    app.add_flag("--use-printed-forms", printed, "evaluate E, F, G exactly as printed, without corrections");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : canal::kExitConfig;
    }

    canal::CommandOptions opts;
    opts.step = step;
    if (!branch.empty()) opts.branch = canal::parse_branch(branch);
    if (!grid.empty()) {
        opts.grid = canal::parse_grid(grid);
        if (!opts.grid) {
            std::cerr << "error: --grid expects NUxNV, e.g. 32x32\n";
            return canal::kExitConfig;
        }
    }
    opts.out_dir = out_dir;
    opts.timestamp = !no_timestamp;
    opts.use_printed_forms = printed;

    canal::RunConfig config;
    try {
        config = canal::load_config(config_path);
    } catch (const canal::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return canal::kExitConfig;
    }

    const canal::CommandResult result = canal::run_command(command, config, opts);
    std::cout << result.report.dump(2) << '\n';
    if (result.exit_code != canal::kExitOk && result.report.contains("error")) {
        std::cerr << "error: " << result.report["error"].value("message", std::string("failed")) << '\n';
    }
    return result.exit_code;
}
