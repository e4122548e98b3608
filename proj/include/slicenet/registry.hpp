#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicenet/model.hpp"
#include "slicenet/policy.hpp"
#include "slicenet/rng.hpp"

namespace slicenet {

/// Result of a slice or service deployment. Rejections are outcomes, not errors.
struct DeployOutcome {
    bool deployed = false;
    std::string reason;

    static DeployOutcome ok() { return {true, {}}; }
    static DeployOutcome rejected(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return deployed; }
};

/// Complete observable state of a Registry. Two registries that went
/// through identical call sequences compare equal.
struct RegistrySnapshot {
    std::map<CloudId, Cloud> clouds;
    std::map<NfId, Nf> nfs;
    std::map<SliceId, StaticSlice> slices;
    std::map<ServiceId, Service> services;
    std::vector<CloudId> registration_order;
    std::string active_policy;
    Rng policy_rng = Rng(0);
    std::map<ServiceId, std::uint64_t> active_instances;

    friend bool operator==(const RegistrySnapshot&, const RegistrySnapshot&) = default;
};

struct CloudInfo {
    CloudId id;
    std::string name;
    std::size_t registration_index = 0;
    ResourceVector capacity;
    ResourceVector allocated;
    ResourceVector residual;
    std::array<double, kDimensions> utilization{};
    std::vector<NfId> hosted;
};

struct NfInfo {
    NfId id;
    std::string name;
    ResourceVector requirement;
    std::optional<CloudId> placement;
    std::string placement_name;
    std::map<SliceId, double> slice_shares;
    double utilization = 0;
    double remaining = 100;
};

struct SliceInfo {
    SliceId id;
    std::string name;
    std::map<NfId, double> composition;
    bool deployed = false;
};

struct ServiceInfo {
    ServiceId id;
    std::string name;
    int priority = 0;
    std::map<SliceId, double> composition;
    std::uint64_t active_instances = 0;
};

/// Clouds in registration order.
std::vector<CloudInfo> dump_cloud_info(const RegistrySnapshot& s);
/// NFs in id order.
std::vector<NfInfo> dump_nf_info(const RegistrySnapshot& s);
std::vector<SliceInfo> dump_slices(const RegistrySnapshot& s);
std::vector<ServiceInfo> dump_services(const RegistrySnapshot& s);

/// Referential-integrity and capacity sweep. Returns one message per
/// violation; empty means the snapshot is consistent.
std::vector<std::string> check_integrity(const RegistrySnapshot& s);

/// Owner of the entity graph. Plays the NF manager (cloud registration, NF
/// placement), slice manager and service manager roles. Single-writer: all
/// mutations go through this object.
class Registry {
public:
    Registry() = default;

    // Entity factories. Ids are monotone per kind and never reused.
    Cloud make_cloud(std::string name, const ResourceVector& capacity);
    Nf make_nf(std::string name, const ResourceVector& requirement);
    StaticSlice make_slice(std::string name);
    Service make_service(std::string name, int priority);

    // --- NF manager -------------------------------------------------------
    CloudId register_cloud(Cloud cloud);
    /// Refused while the cloud hosts any NF.
    Cloud unregister_cloud(CloudId id);

    void set_scheduler_policy(const std::string& name);
    const std::string& scheduler_policy() const noexcept { return state_.active_policy; }
    void seed_policy_rng(std::uint64_t seed) { state_.policy_rng = Rng(seed); }
    PolicyCatalog& policies() noexcept { return catalog_; }

    /// Places `nf` with the active policy. On rejection nothing changes.
    PlacementDecision deploy_nf(const Nf& nf);
    /// Refused while any slice rides the NF. Returns the detached NF.
    Nf undeploy_nf(NfId id);

    // --- slice manager ----------------------------------------------------
    /// All-or-nothing: either every share lands on its NF or nothing changes.
    DeployOutcome deploy_slice(const StaticSlice& slice);
    /// Refused while a service composes the slice.
    StaticSlice undeploy_slice(SliceId id);

    // --- service manager --------------------------------------------------
    /// Registers a template. Consumes no resources; instances are accounted
    /// by the engine.
    DeployOutcome deploy_service(const Service& service);
    /// Refused while active instances exist.
    Service undeploy_service(ServiceId id);

    void pin_service(ServiceId id);
    void unpin_service(ServiceId id);
    std::uint64_t active_instances(ServiceId id) const;

    // --- queries ----------------------------------------------------------
    const std::map<CloudId, Cloud>& clouds() const noexcept { return state_.clouds; }
    const std::map<NfId, Nf>& nfs() const noexcept { return state_.nfs; }
    const std::map<SliceId, StaticSlice>& slices() const noexcept { return state_.slices; }
    const std::map<ServiceId, Service>& services() const noexcept { return state_.services; }
    const std::vector<CloudId>& registration_order() const noexcept {
        return state_.registration_order;
    }

    const Cloud& cloud(CloudId id) const;
    const Nf& nf(NfId id) const;
    const StaticSlice& slice(SliceId id) const;
    const Service& service(ServiceId id) const;

    /// First entity (lowest id) with the given display name.
    std::optional<CloudId> find_cloud(const std::string& name) const;
    std::optional<NfId> find_nf(const std::string& name) const;
    std::optional<SliceId> find_slice(const std::string& name) const;
    std::optional<ServiceId> find_service(const std::string& name) const;

    /// Views of all clouds in registration order.
    std::vector<CloudView> cloud_views() const;

    const RegistrySnapshot& snapshot() const noexcept { return state_; }

    std::vector<CloudInfo> dump_cloud_info() const { return slicenet::dump_cloud_info(state_); }
    std::vector<NfInfo> dump_nf_info() const { return slicenet::dump_nf_info(state_); }
    std::vector<SliceInfo> dump_slices() const { return slicenet::dump_slices(state_); }
    std::vector<ServiceInfo> dump_services() const { return slicenet::dump_services(state_); }

private:
    RegistrySnapshot state_;
    PolicyCatalog catalog_;
    std::uint64_t next_cloud_ = 0;
    std::uint64_t next_nf_ = 0;
    std::uint64_t next_slice_ = 0;
    std::uint64_t next_service_ = 0;
};

}  // namespace slicenet
