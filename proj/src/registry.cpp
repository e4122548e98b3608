#include "slicenet/registry.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "slicenet/error.hpp"

namespace slicenet {

namespace {

template <class Map, class Id>
const auto& lookup(const Map& m, Id id, const char* kind) {
    auto it = m.find(id);
    if (it == m.end()) throw ValidationError(fmt::format("unknown {} id {}", kind, id.value));
    return it->second;
}

template <class Map>
auto find_by_name(const Map& m, const std::string& name)
    -> std::optional<typename Map::key_type> {
    for (const auto& [id, e] : m) {
        if (e.name == name) return id;
    }
    return std::nullopt;
}

double sum_shares(const std::map<SliceId, double>& shares) {
    double sum = 0;
    for (const auto& [s, pct] : shares) sum += pct;
    return sum;
}

}  // namespace

Cloud Registry::make_cloud(std::string name, const ResourceVector& capacity) {
    return Cloud{CloudId{next_cloud_++}, std::move(name), capacity, {}};
}

Nf Registry::make_nf(std::string name, const ResourceVector& requirement) {
    return Nf{NfId{next_nf_++}, std::move(name), requirement, std::nullopt, {}};
}

StaticSlice Registry::make_slice(std::string name) {
    return StaticSlice{SliceId{next_slice_++}, std::move(name), {}, false};
}

Service Registry::make_service(std::string name, int priority) {
    if (priority < 0) throw ValidationError("service priority must be >= 0");
    return Service{ServiceId{next_service_++}, std::move(name), priority, {}};
}

CloudId Registry::register_cloud(Cloud cloud) {
    if (state_.clouds.count(cloud.id)) {
        throw StateError(fmt::format("cloud id {} already registered", cloud.id.value));
    }
    if (!cloud.capacity.all_positive()) {
        throw ValidationError("cloud '" + cloud.name + "' capacity must be > 0 in every dimension, got " +
                              to_string(cloud.capacity));
    }
    if (!cloud.allocations.empty()) {
        throw ValidationError("cloud '" + cloud.name + "' must be registered without allocations");
    }
    next_cloud_ = std::max(next_cloud_, cloud.id.value + 1);
    const CloudId id = cloud.id;
    state_.clouds.emplace(id, std::move(cloud));
    state_.registration_order.push_back(id);
    return id;
}

Cloud Registry::unregister_cloud(CloudId id) {
    const Cloud& c = cloud(id);
    if (!c.allocations.empty()) {
        throw StateError(fmt::format("cloud '{}' still hosts {} NF(s)", c.name, c.allocations.size()));
    }
    Cloud out = c;
    state_.clouds.erase(id);
    std::erase(state_.registration_order, id);
    return out;
}

void Registry::set_scheduler_policy(const std::string& name) {
    catalog_.get(name);
    state_.active_policy = name;
}

std::vector<CloudView> Registry::cloud_views() const {
    std::vector<CloudView> views;
    views.reserve(state_.registration_order.size());
    for (std::size_t i = 0; i < state_.registration_order.size(); ++i) {
        const Cloud& c = state_.clouds.at(state_.registration_order[i]);
        views.push_back(CloudView{c.id, c.capacity, c.residual(), i});
    }
    return views;
}

PlacementDecision Registry::deploy_nf(const Nf& nf) {
    if (nf.deployed() || state_.nfs.count(nf.id)) {
        throw StateError("NF '" + nf.name + "' is already deployed");
    }
    if (!nf.slice_shares.empty()) {
        throw ValidationError("NF '" + nf.name + "' carries slice shares before deployment");
    }
    if (state_.active_policy.empty()) throw StateError("no scheduler policy set");

    const auto views = cloud_views();
    PlacementDecision decision = catalog_.get(state_.active_policy)(nf.requirement, views, state_.policy_rng);
    if (!decision.is_placed()) return decision;

    auto it = state_.clouds.find(decision.cloud());
    if (it == state_.clouds.end()) {
        throw StateError("policy '" + state_.active_policy + "' chose a cloud that is not registered");
    }
    // Re-check on the exact prospective sum so rounding can never exceed capacity.
    Cloud prospective = it->second;
    prospective.allocations.emplace(nf.id, nf.requirement);
    if (!rv_fits_within(prospective.allocated(), prospective.capacity)) {
        return PlacementDecision::rejected("cloud '" + it->second.name + "' cannot host " +
                                           to_string(nf.requirement));
    }
    it->second = std::move(prospective);
    Nf placed = nf;
    placed.placement = decision.cloud();
    next_nf_ = std::max(next_nf_, nf.id.value + 1);
    state_.nfs.emplace(nf.id, std::move(placed));
    return decision;
}

Nf Registry::undeploy_nf(NfId id) {
    const Nf& current = nf(id);
    if (!current.slice_shares.empty()) {
        throw StateError(fmt::format("NF '{}' still powers {} slice(s)", current.name,
                                     current.slice_shares.size()));
    }
    Nf out = current;
    state_.clouds.at(*out.placement).allocations.erase(id);
    state_.nfs.erase(id);
    out.placement.reset();
    return out;
}

DeployOutcome Registry::deploy_slice(const StaticSlice& slice) {
    if (slice.deployed || state_.slices.count(slice.id)) {
        throw StateError("slice '" + slice.name + "' is already deployed");
    }
    if (slice.composition.empty()) {
        return DeployOutcome::rejected("slice '" + slice.name + "' has an empty composition");
    }
    // Validate everything before touching any NF.
    for (const auto& [nf_id, pct] : slice.composition) {
        if (!valid_share(pct)) {
            return DeployOutcome::rejected(
                fmt::format("slice '{}': share {} on NF {} is outside (0, 100]", slice.name, pct, nf_id.value));
        }
        auto it = state_.nfs.find(nf_id);
        if (it == state_.nfs.end()) {
            return DeployOutcome::rejected(
                fmt::format("slice '{}' references NF {} which is not deployed", slice.name, nf_id.value));
        }
        auto shares = it->second.slice_shares;
        shares[slice.id] = pct;
        if (sum_shares(shares) > 100.0 + kShareEpsilon) {
            return DeployOutcome::rejected(fmt::format(
                "slice '{}' needs {} on NF '{}' which has only {} remaining", slice.name, pct,
                it->second.name, nf_remaining_share(it->second)));
        }
    }
    for (const auto& [nf_id, pct] : slice.composition) state_.nfs.at(nf_id).slice_shares[slice.id] = pct;
    StaticSlice stored = slice;
    stored.deployed = true;
    next_slice_ = std::max(next_slice_, slice.id.value + 1);
    state_.slices.emplace(slice.id, std::move(stored));
    return DeployOutcome::ok();
}

StaticSlice Registry::undeploy_slice(SliceId id) {
    const StaticSlice& current = slice(id);
    for (const auto& [sid, svc] : state_.services) {
        if (svc.composition.count(id)) {
            throw StateError("slice '" + current.name + "' is composed by service '" + svc.name + "'");
        }
    }
    StaticSlice out = current;
    for (const auto& [nf_id, pct] : out.composition) state_.nfs.at(nf_id).slice_shares.erase(id);
    state_.slices.erase(id);
    out.deployed = false;
    return out;
}

DeployOutcome Registry::deploy_service(const Service& service) {
    if (state_.services.count(service.id)) {
        throw StateError("service '" + service.name + "' is already deployed");
    }
    if (service.priority < 0) {
        return DeployOutcome::rejected("service '" + service.name + "' has a negative priority");
    }
    if (service.composition.empty()) {
        return DeployOutcome::rejected("service '" + service.name + "' has an empty composition");
    }
    for (const auto& [slice_id, pct] : service.composition) {
        if (!valid_share(pct)) {
            return DeployOutcome::rejected(fmt::format("service '{}': share {} on slice {} is outside (0, 100]",
                                                       service.name, pct, slice_id.value));
        }
        if (!state_.slices.count(slice_id)) {
            return DeployOutcome::rejected(fmt::format("service '{}' references slice {} which is not deployed",
                                                       service.name, slice_id.value));
        }
    }
    next_service_ = std::max(next_service_, service.id.value + 1);
    state_.services.emplace(service.id, service);
    return DeployOutcome::ok();
}

Service Registry::undeploy_service(ServiceId id) {
    const Service& current = service(id);
    if (active_instances(id) > 0) {
        throw StateError(fmt::format("service '{}' has {} active slicelet(s)", current.name,
                                     active_instances(id)));
    }
    Service out = current;
    state_.services.erase(id);
    state_.active_instances.erase(id);
    return out;
}

void Registry::pin_service(ServiceId id) {
    service(id);
    ++state_.active_instances[id];
}

void Registry::unpin_service(ServiceId id) {
    auto it = state_.active_instances.find(id);
    if (it == state_.active_instances.end() || it->second == 0) {
        throw StateError(fmt::format("service {} has no active instance to release", id.value));
    }
    if (--it->second == 0) state_.active_instances.erase(it);
}

std::uint64_t Registry::active_instances(ServiceId id) const {
    auto it = state_.active_instances.find(id);
    return it == state_.active_instances.end() ? 0 : it->second;
}

const Cloud& Registry::cloud(CloudId id) const { return lookup(state_.clouds, id, "cloud"); }
const Nf& Registry::nf(NfId id) const { return lookup(state_.nfs, id, "NF"); }
const StaticSlice& Registry::slice(SliceId id) const { return lookup(state_.slices, id, "slice"); }
const Service& Registry::service(ServiceId id) const { return lookup(state_.services, id, "service"); }

std::optional<CloudId> Registry::find_cloud(const std::string& name) const {
    return find_by_name(state_.clouds, name);
}
std::optional<NfId> Registry::find_nf(const std::string& name) const {
    return find_by_name(state_.nfs, name);
}
std::optional<SliceId> Registry::find_slice(const std::string& name) const {
    return find_by_name(state_.slices, name);
}
std::optional<ServiceId> Registry::find_service(const std::string& name) const {
    return find_by_name(state_.services, name);
}

// --- dumps ------------------------------------------------------------------

std::vector<CloudInfo> dump_cloud_info(const RegistrySnapshot& s) {
    std::vector<CloudInfo> out;
    for (std::size_t i = 0; i < s.registration_order.size(); ++i) {
        const Cloud& c = s.clouds.at(s.registration_order[i]);
        CloudInfo info{c.id, c.name, i, c.capacity, c.allocated(), c.residual(), c.utilization_ratios(), {}};
        for (const auto& [nf, amount] : c.allocations) info.hosted.push_back(nf);
        out.push_back(std::move(info));
    }
    return out;
}

std::vector<NfInfo> dump_nf_info(const RegistrySnapshot& s) {
    std::vector<NfInfo> out;
    for (const auto& [id, nf] : s.nfs) {
        NfInfo info{id, nf.name, nf.requirement, nf.placement, {}, nf.slice_shares,
                    nf_utilization(nf), nf_remaining_share(nf)};
        if (nf.placement) {
            auto it = s.clouds.find(*nf.placement);
            if (it != s.clouds.end()) info.placement_name = it->second.name;
        }
        out.push_back(std::move(info));
    }
    return out;
}

std::vector<SliceInfo> dump_slices(const RegistrySnapshot& s) {
    std::vector<SliceInfo> out;
    for (const auto& [id, sl] : s.slices) out.push_back({id, sl.name, sl.composition, sl.deployed});
    return out;
}

std::vector<ServiceInfo> dump_services(const RegistrySnapshot& s) {
    std::vector<ServiceInfo> out;
    for (const auto& [id, svc] : s.services) {
        auto it = s.active_instances.find(id);
        out.push_back({id, svc.name, svc.priority, svc.composition,
                       it == s.active_instances.end() ? 0 : it->second});
    }
    return out;
}

std::vector<std::string> check_integrity(const RegistrySnapshot& s) {
    std::vector<std::string> v;

    if (s.registration_order.size() != s.clouds.size()) {
        v.push_back("registration order length differs from cloud count");
    }
    for (const CloudId id : s.registration_order) {
        if (!s.clouds.count(id)) v.push_back(fmt::format("registration order names unknown cloud {}", id.value));
        if (std::count(s.registration_order.begin(), s.registration_order.end(), id) != 1) {
            v.push_back(fmt::format("cloud {} appears more than once in registration order", id.value));
        }
    }
    for (const auto& [cid, c] : s.clouds) {
        if (!rv_fits_within(c.allocated(), c.capacity)) {
            v.push_back("cloud '" + c.name + "' allocations exceed capacity");
        }
        for (const auto& [nid, amount] : c.allocations) {
            auto it = s.nfs.find(nid);
            if (it == s.nfs.end()) {
                v.push_back(fmt::format("cloud '{}' allocates to unknown NF {}", c.name, nid.value));
            } else if (it->second.placement != cid) {
                v.push_back(fmt::format("cloud '{}' allocates to NF {} placed elsewhere", c.name, nid.value));
            } else if (!(amount == it->second.requirement)) {
                v.push_back(fmt::format("cloud '{}' allocation for NF {} differs from its requirement", c.name, nid.value));
            }
        }
    }
    for (const auto& [nid, nf] : s.nfs) {
        if (!nf.placement) {
            v.push_back("registered NF '" + nf.name + "' has no placement");
            continue;
        }
        auto cit = s.clouds.find(*nf.placement);
        if (cit == s.clouds.end() || !cit->second.allocations.count(nid)) {
            v.push_back("NF '" + nf.name + "' placement is not mirrored by its cloud");
        }
        if (nf_utilization(nf) > 100.0 + kShareEpsilon) v.push_back("NF '" + nf.name + "' shares exceed 100");
        for (const auto& [sid, pct] : nf.slice_shares) {
            auto sit = s.slices.find(sid);
            if (sit == s.slices.end()) {
                v.push_back(fmt::format("NF '{}' carries a share of unknown slice {}", nf.name, sid.value));
            } else if (!sit->second.composition.count(nid) || sit->second.composition.at(nid) != pct) {
                v.push_back(fmt::format("NF '{}' share for slice {} is not mirrored by the slice", nf.name, sid.value));
            }
        }
    }
    for (const auto& [sid, sl] : s.slices) {
        if (!sl.deployed) v.push_back("registered slice '" + sl.name + "' is not flagged deployed");
        if (sl.composition.empty()) v.push_back("slice '" + sl.name + "' has an empty composition");
        for (const auto& [nid, pct] : sl.composition) {
            auto it = s.nfs.find(nid);
            if (it == s.nfs.end() || !it->second.slice_shares.count(sid) || it->second.slice_shares.at(sid) != pct) {
                v.push_back(fmt::format("slice '{}' share on NF {} is not mirrored", sl.name, nid.value));
            }
        }
    }
    for (const auto& [svid, svc] : s.services) {
        for (const auto& [sid, pct] : svc.composition) {
            if (!s.slices.count(sid)) {
                v.push_back(fmt::format("service '{}' references unknown slice {}", svc.name, sid.value));
            }
        }
    }
    for (const auto& [svid, n] : s.active_instances) {
        if (!s.services.count(svid)) v.push_back(fmt::format("active instances of unknown service {}", svid.value));
    }
    return v;
}

}  // namespace slicenet
