#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "slicenet/error.hpp"
#include "slicenet/workload.hpp"

namespace slicenet {

struct ResourceDecl {
    std::string name;
    double compute = 0;
    double memory = 0;
    double storage = 0;
};

struct SliceDecl {
    std::string name;
    std::vector<std::pair<std::string, double>> composition;  // NF name -> pct
};

struct ServiceDecl {
    std::string name;
    int priority = 0;
    std::vector<std::pair<std::string, double>> composition;  // slice name -> pct
};

struct RunDecl {
    double until = 0;
    std::uint64_t seed = 0;
};

struct OutputDecl {
    std::string directory = "out";
    bool summary = true;
    bool trace = true;
    bool charts = true;
    Dimension layered_dimension = Dimension::Compute;
};

/// In-memory form of a scenario file. Names are the cross-reference keys.
struct Scenario {
    std::vector<ResourceDecl> clouds;
    std::string policy;
    std::vector<ResourceDecl> nfs;
    std::vector<SliceDecl> slices;
    std::vector<ServiceDecl> services;
    std::vector<WorkloadSpec> workloads;
    RunDecl run;
    OutputDecl output;
    /// FNV-1a of the source text.
    std::string source_hash;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string where;  // e.g. "slices[1].composition[NF 9]"
    std::string message;
};

std::string to_string(const Diagnostic& d);
bool has_errors(const std::vector<Diagnostic>& diags);

/// Thrown when the document is not valid JSON at all.
class ScenarioParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

struct LoadedScenario {
    Scenario scenario;
    std::vector<Diagnostic> diagnostics;
};

/// Parses and statically checks a scenario. Every schema, reference and
/// parameter problem becomes a diagnostic; only non-JSON input throws.
LoadedScenario parse_scenario(const std::string& text);

/// Throws IoError if the file cannot be read.
LoadedScenario load_scenario_file(const std::filesystem::path& path);

/// Diagnostics for a file on disk.
std::vector<Diagnostic> validate(const std::filesystem::path& path);

/// Static checks on an already-parsed scenario (also run by parse_scenario).
std::vector<Diagnostic> check_scenario(const Scenario& s);

}  // namespace slicenet
