#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slicenet/model.hpp"
#include "slicenet/registry.hpp"

namespace slicenet {

struct ExplicitEntry {
    std::string service;
    double arrival = 0;
    double duration = 0;
};

struct ExplicitWorkload {
    std::vector<ExplicitEntry> entries;
};

/// Poisson arrivals at `rate` per time unit with exponential durations of
/// mean `mean_duration`, truncated at `horizon`.
struct PoissonWorkload {
    std::string service;
    double rate = 0;
    double mean_duration = 0;
    double horizon = 0;
};

struct WorkloadSpec {
    std::variant<ExplicitWorkload, PoissonWorkload> kind;
    std::uint64_t seed = 0;
};

/// Throws ValidationError on invalid parameters.
void validate_workload(const WorkloadSpec& spec);

/// Slicelets for one spec with local ids 0..n-1. Explicit entries keep their
/// listed order; Poisson arrivals come out in time order, drawn from `spec.seed`.
std::vector<Slicelet> materialize(const WorkloadSpec& spec, const Registry& registry);

/// Materializes every spec on its own stream derive_stream_seed(master, i),
/// merges by arrival time (ties: spec index, then position) and renumbers ids.
std::vector<Slicelet> materialize_all(std::span<const WorkloadSpec> specs,
                                      const Registry& registry, std::uint64_t master_seed);

}  // namespace slicenet
