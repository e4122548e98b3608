#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slicenet/engine.hpp"
#include "slicenet/registry.hpp"
#include "slicenet/report.hpp"
#include "slicenet/scenario.hpp"

namespace slicenet {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitSetupRejected = 2,
    kExitIo = 3,
};

/// A deployment was rejected while building the topology.
class SetupError : public Error {
public:
    using Error::Error;
};

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> policy;
    std::optional<std::filesystem::path> out_dir;
};

struct RunResult {
    Registry registry;
    std::vector<TraceRecord> trace;
    MetricsSummary summary;
    std::filesystem::path out_dir;
};

/// Full lifecycle: register clouds, set policy, deploy NFs, slices and
/// services, materialize workloads, run the engine and summarize. Writes
/// nothing. Throws SetupError on any setup-stage rejection.
RunResult execute_scenario(const Scenario& scenario, const RunOverrides& overrides = {});

/// Writes summary.json, trace.jsonl and charts/ according to output flags.
void write_outputs(const RunResult& result, const Scenario& scenario);

// Command entry points; return process exit codes.
int validate_command(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int run_command(const std::filesystem::path& path, const RunOverrides& overrides,
                std::ostream& out, std::ostream& err);
int report_command(const std::filesystem::path& dir, std::ostream& out, std::ostream& err);

/// Runs independent scenarios on up to `jobs` threads. With more than one
/// file and an --out override, each scenario writes to <out>/<file stem>.
/// Returns the highest exit code.
int run_batch(const std::vector<std::filesystem::path>& paths, const RunOverrides& overrides,
              unsigned jobs, std::ostream& out, std::ostream& err);

}  // namespace slicenet
