#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicenet/engine.hpp"
#include "slicenet/registry.hpp"

namespace slicenet {

struct RunMetadata {
    std::uint64_t seed = 0;
    std::string policy;
    std::string scenario_hash;
    /// Run horizon; the time window for mean slice loads.
    double horizon = 0;

    friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct CloudMetrics {
    CloudId id;
    std::string name;
    ResourceVector capacity;
    ResourceVector residual;
    std::array<double, kDimensions> utilization{};
};

struct NfMetrics {
    NfId id;
    std::string name;
    std::optional<std::string> placement;
    ResourceVector requirement;
    std::map<SliceId, double> slice_shares;
    double utilization = 0;
    double remaining = 100;
};

struct SliceMetrics {
    SliceId id;
    std::string name;
    bool deployed = false;
    std::map<NfId, double> composition;
    double mean_load = 0;
    double peak_load = 0;
};

struct ServiceMetrics {
    ServiceId id;
    std::string name;
    int priority = 0;
    std::map<SliceId, double> composition;
    std::uint64_t admitted = 0;
    std::uint64_t rejected = 0;
    std::uint64_t departed = 0;
    /// Absent when the service saw no arrivals.
    std::optional<double> rejection_ratio;
};

struct MetricsSummary {
    RunMetadata metadata;
    std::vector<CloudMetrics> clouds;
    std::vector<NfMetrics> nfs;
    std::vector<SliceMetrics> slices;
    std::vector<ServiceMetrics> services;
};

/// Pure function of its inputs. Slice mean loads are time-weighted over
/// [0, metadata.horizon]; peaks are taken over post-event values.
MetricsSummary summarize(const RegistrySnapshot& snapshot, std::span<const TraceRecord> trace,
                         const RunMetadata& metadata = {});

enum class ChartKind { CloudUtilization, NfSliceShares, LayeredComposition };

const char* chart_kind_name(ChartKind k);

struct ChartData {
    ChartKind kind = ChartKind::NfSliceShares;
    std::string title;
    std::vector<std::string> labels;
    std::vector<double> weights;
};

inline constexpr const char* kUnusedLabel = "Unused";

/// Pie data for one NF: (slice name, share) per riding slice in slice id
/// order, then ("Unused", remaining share).
ChartData nf_slice_chart(NfId nf, const RegistrySnapshot& snapshot);

/// One bar per cloud (registration order): utilization ratio in `dim`.
ChartData cloud_utilization_chart(const RegistrySnapshot& snapshot, Dimension dim);

struct LayeredNode {
    std::string kind;  // cloud | nf | slice | service | unused
    std::uint64_t id = 0;
    std::string label;
    double weight = 0;
    std::vector<LayeredNode> children;
};

/// Cloud -> NFs -> slices -> services breakdown of one cloud. Weights are
/// fractions of the cloud's capacity in the chosen dimension; each level's
/// children sum to their parent's weight.
struct LayeredView {
    CloudId cloud;
    std::string cloud_name;
    Dimension dimension = Dimension::Compute;
    /// rings[0] = NFs, rings[1] = slices, rings[2] = services.
    std::array<ChartData, 3> rings;
    LayeredNode root;
};

std::vector<LayeredView> layered_view(const RegistrySnapshot& snapshot,
                                      Dimension dim = Dimension::Compute);

}  // namespace slicenet
