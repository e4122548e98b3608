#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "slicenet/ids.hpp"
#include "slicenet/resource_vector.hpp"

namespace slicenet {

/// Tolerance applied to every "share sum <= 100" check.
inline constexpr double kShareEpsilon = 1e-9;

/// True iff pct lies in (0, 100] and is finite.
bool valid_share(double pct) noexcept;

/// Capacity pool hosting NFs. `allocations` holds the absolute amount granted
/// to each hosted NF.
struct Cloud {
    CloudId id;
    std::string name;
    ResourceVector capacity;
    std::map<NfId, ResourceVector> allocations;

    /// Sum of allocations, accumulated in NfId order.
    ResourceVector allocated() const;
    ResourceVector residual() const;
    /// allocated / capacity for one dimension.
    double utilization_ratio(Dimension d) const;
    std::array<double, kDimensions> utilization_ratios() const;

    friend bool operator==(const Cloud&, const Cloud&) = default;
};

/// A deployable network function. `requirement` is an absolute demand on the
/// hosting cloud; `slice_shares` maps each riding slice to its percentage.
struct Nf {
    NfId id;
    std::string name;
    ResourceVector requirement;
    std::optional<CloudId> placement;
    std::map<SliceId, double> slice_shares;

    bool deployed() const noexcept { return placement.has_value(); }

    friend bool operator==(const Nf&, const Nf&) = default;
};

/// Sum of the NF's slice shares, in [0, 100 + eps].
double nf_utilization(const Nf& nf) noexcept;

/// 100 - nf_utilization(nf).
double nf_remaining_share(const Nf& nf) noexcept;

/// Percentage shares over a set of NFs.
struct StaticSlice {
    SliceId id;
    std::string name;
    std::map<NfId, double> composition;
    bool deployed = false;

    /// Adds (or replaces) the share this slice takes on `nf`.
    void compose(NfId nf, double pct);

    friend bool operator==(const StaticSlice&, const StaticSlice&) = default;
};

/// Communication service template: shares over slices plus a priority
/// (0 = highest).
struct Service {
    ServiceId id;
    std::string name;
    int priority = 0;
    std::map<SliceId, double> composition;

    void compose(SliceId slice, double pct);

    friend bool operator==(const Service&, const Service&) = default;
};

/// One timed request to consume a service instance.
struct Slicelet {
    SliceletId id;
    ServiceId service_id;
    double arrival = 0;
    double duration = 0;

    friend bool operator==(const Slicelet&, const Slicelet&) = default;
};

}  // namespace slicenet
