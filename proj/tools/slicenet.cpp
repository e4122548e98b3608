#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "slicenet/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"slicenet - flow-level network slicing simulator"};
    app.require_subcommand(1);

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file and list every problem");
    validate_cmd->add_option("file", validate_path, "Scenario file")->required();

    std::vector<std::string> run_paths;
    std::uint64_t seed = 0;
    std::string policy;
    std::string out_dir;
    unsigned jobs = 1;
    auto* run_cmd = app.add_subcommand("run", "Run a scenario and write summary, trace and charts");
    run_cmd->add_option("file", run_paths, "Scenario file(s)")->required();
    auto* seed_opt = run_cmd->add_option("--seed", seed, "Override run.seed");
    auto* policy_opt = run_cmd->add_option("--policy", policy, "Override the scheduler policy");
    auto* out_opt = run_cmd->add_option("--out", out_dir, "Override output.directory");
    run_cmd->add_option("--jobs,-j", jobs, "Scenarios to run in parallel")
        ->default_val(1)
        ->check(CLI::Range(1u, 4096u));

    std::string report_dir;
    auto* report_cmd = app.add_subcommand("report", "Print tables for a finished run directory");
    report_cmd->add_option("dir", report_dir, "Run output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : slicenet::kExitValidation;
    }

    if (*validate_cmd) return slicenet::validate_command(validate_path, std::cout, std::cerr);
    if (*report_cmd) return slicenet::report_command(report_dir, std::cout, std::cerr);

    slicenet::RunOverrides overrides;
    if (*seed_opt) overrides.seed = seed;
    if (*policy_opt) overrides.policy = policy;
    if (*out_opt) overrides.out_dir = out_dir;
    std::vector<std::filesystem::path> paths(run_paths.begin(), run_paths.end());
    return slicenet::run_batch(paths, overrides, jobs, std::cout, std::cerr);
}
