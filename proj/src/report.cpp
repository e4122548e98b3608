#include "slicenet/report.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "slicenet/error.hpp"

namespace slicenet {

namespace {

struct LoadTracker {
    double current = 0;
    double since = 0;
    double area = 0;
    double peak = 0;
};

}  // namespace

MetricsSummary summarize(const RegistrySnapshot& snapshot, std::span<const TraceRecord> trace,
                         const RunMetadata& metadata) {
    MetricsSummary out;
    out.metadata = metadata;

    for (const CloudInfo& c : dump_cloud_info(snapshot)) {
        out.clouds.push_back({c.id, c.name, c.capacity, c.residual, c.utilization});
    }
    for (const NfInfo& n : dump_nf_info(snapshot)) {
        NfMetrics m{n.id, n.name, std::nullopt, n.requirement, n.slice_shares, n.utilization, n.remaining};
        if (n.placement) m.placement = n.placement_name;
        out.nfs.push_back(std::move(m));
    }

    std::map<SliceId, LoadTracker> loads;
    std::map<ServiceId, ServiceMetrics> services;
    for (const auto& [id, svc] : snapshot.services) {
        services[id] = ServiceMetrics{id, svc.name, svc.priority, svc.composition, 0, 0, 0, std::nullopt};
    }
    for (const TraceRecord& r : trace) {
        auto& svc = services[r.service_id];
        svc.id = r.service_id;
        switch (r.outcome) {
            case TraceOutcome::Admitted: ++svc.admitted; break;
            case TraceOutcome::Rejected: ++svc.rejected; break;
            case TraceOutcome::Departed: ++svc.departed; break;
        }
        for (const SliceLoad& l : r.loads) {
            LoadTracker& t = loads[l.slice_id];
            t.area += t.current * (r.time - t.since);
            t.current = l.active_load;
            t.since = r.time;
            t.peak = std::max(t.peak, l.active_load);
        }
    }
    for (auto& [id, svc] : services) {
        const auto arrivals = svc.admitted + svc.rejected;
        if (arrivals > 0) svc.rejection_ratio = static_cast<double>(svc.rejected) / static_cast<double>(arrivals);
        out.services.push_back(std::move(svc));
    }

    for (const SliceInfo& s : dump_slices(snapshot)) {
        SliceMetrics m{s.id, s.name, s.deployed, s.composition, 0, 0};
        auto it = loads.find(s.id);
        if (it != loads.end()) {
            const LoadTracker& t = it->second;
            m.peak_load = t.peak;
            if (metadata.horizon > 0) {
                const double tail = std::max(0.0, metadata.horizon - t.since);
                m.mean_load = (t.area + t.current * tail) / metadata.horizon;
            }
        }
        out.slices.push_back(std::move(m));
    }
    return out;
}

const char* chart_kind_name(ChartKind k) {
    switch (k) {
        case ChartKind::CloudUtilization: return "CloudUtilization";
        case ChartKind::NfSliceShares: return "NfSliceShares";
        case ChartKind::LayeredComposition: return "LayeredComposition";
    }
    return "?";
}

ChartData nf_slice_chart(NfId nf_id, const RegistrySnapshot& snapshot) {
    auto it = snapshot.nfs.find(nf_id);
    if (it == snapshot.nfs.end()) throw ValidationError(fmt::format("unknown NF id {}", nf_id.value));
    const Nf& nf = it->second;

    ChartData chart{ChartKind::NfSliceShares, nf.name, {}, {}};
    for (const auto& [slice_id, pct] : nf.slice_shares) {
        auto sit = snapshot.slices.find(slice_id);
        chart.labels.push_back(sit != snapshot.slices.end() ? sit->second.name
                                                            : fmt::format("slice {}", slice_id.value));
        chart.weights.push_back(pct);
    }
    chart.labels.emplace_back(kUnusedLabel);
    chart.weights.push_back(std::max(0.0, nf_remaining_share(nf)));
    return chart;
}

ChartData cloud_utilization_chart(const RegistrySnapshot& snapshot, Dimension dim) {
    ChartData chart{ChartKind::CloudUtilization,
                    fmt::format("Cloud utilization ratio ({})", dimension_name(dim)), {}, {}};
    for (const CloudId id : snapshot.registration_order) {
        const Cloud& c = snapshot.clouds.at(id);
        chart.labels.push_back(c.name);
        chart.weights.push_back(c.utilization_ratio(dim));
    }
    return chart;
}

namespace {

LayeredNode unused_node(double weight) {
    return LayeredNode{"unused", 0, kUnusedLabel, weight, {}};
}

// Services sharing a slice segment. Declared shares that sum above 100 are
// scaled down so the children still add up to the segment.
LayeredNode slice_node(const RegistrySnapshot& s, SliceId slice_id, double weight) {
    auto sit = s.slices.find(slice_id);
    LayeredNode node{"slice", slice_id.value,
                     sit != s.slices.end() ? sit->second.name : fmt::format("slice {}", slice_id.value),
                     weight, {}};
    double declared = 0;
    for (const auto& [id, svc] : s.services) {
        auto it = svc.composition.find(slice_id);
        if (it != svc.composition.end()) declared += it->second;
    }
    const double scale = declared > 100.0 ? 100.0 / declared : 1.0;
    double used = 0;
    for (const auto& [id, svc] : s.services) {
        auto it = svc.composition.find(slice_id);
        if (it == svc.composition.end()) continue;
        const double w = weight * it->second * scale / 100.0;
        used += w;
        node.children.push_back(LayeredNode{"service", id.value, svc.name, w, {}});
    }
    node.children.push_back(unused_node(std::max(0.0, weight - used)));
    return node;
}

void collect_ring(const LayeredNode& node, int depth, int target, ChartData& ring) {
    if (depth == target) {
        ring.labels.push_back(node.label);
        ring.weights.push_back(node.weight);
        return;
    }
    if (node.children.empty()) {
        // Leaves above the target depth (unused segments) carry through.
        ring.labels.push_back(node.label);
        ring.weights.push_back(node.weight);
        return;
    }
    for (const auto& child : node.children) collect_ring(child, depth + 1, target, ring);
}

}  // namespace

std::vector<LayeredView> layered_view(const RegistrySnapshot& snapshot, Dimension dim) {
    std::vector<LayeredView> out;
    const int d = static_cast<int>(dim);
    for (const CloudId cid : snapshot.registration_order) {
        const Cloud& cloud = snapshot.clouds.at(cid);
        LayeredView view;
        view.cloud = cid;
        view.cloud_name = cloud.name;
        view.dimension = dim;
        view.root = LayeredNode{"cloud", cid.value, cloud.name, 1.0, {}};

        double hosted = 0;
        for (const auto& [nf_id, amount] : cloud.allocations) {
            const double w = amount.at(d) / cloud.capacity.at(d);
            hosted += w;
            const Nf& nf = snapshot.nfs.at(nf_id);
            LayeredNode nf_node{"nf", nf_id.value, nf.name, w, {}};
            double shared = 0;
            for (const auto& [slice_id, pct] : nf.slice_shares) {
                const double sw = w * pct / 100.0;
                shared += sw;
                nf_node.children.push_back(slice_node(snapshot, slice_id, sw));
            }
            nf_node.children.push_back(unused_node(std::max(0.0, w - shared)));
            view.root.children.push_back(std::move(nf_node));
        }
        view.root.children.push_back(unused_node(std::max(0.0, 1.0 - hosted)));

        static constexpr const char* kRingNames[] = {"NFs", "slices", "services"};
        for (int ring = 0; ring < 3; ++ring) {
            ChartData& c = view.rings[ring];
            c.kind = ChartKind::LayeredComposition;
            c.title = fmt::format("{} {} ({})", cloud.name, kRingNames[ring], dimension_name(dim));
            for (const auto& child : view.root.children) collect_ring(child, 1, ring + 1, c);
        }
        out.push_back(std::move(view));
    }
    return out;
}

}  // namespace slicenet
