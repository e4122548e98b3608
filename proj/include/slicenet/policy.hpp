#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicenet/ids.hpp"
#include "slicenet/resource_vector.hpp"
#include "slicenet/rng.hpp"

namespace slicenet {

/// Read-only view of a cloud offered to a placement policy.
struct CloudView {
    CloudId cloud_id;
    ResourceVector capacity;
    ResourceVector residual;
    std::size_t registration_index = 0;
};

class PlacementDecision {
public:
    static PlacementDecision placed(CloudId cloud) { return PlacementDecision(cloud, {}); }
    static PlacementDecision rejected(std::string reason) {
        return PlacementDecision(std::nullopt, std::move(reason));
    }

    bool is_placed() const noexcept { return cloud_.has_value(); }
    /// Only valid when is_placed().
    CloudId cloud() const { return cloud_.value(); }
    const std::string& reason() const noexcept { return reason_; }

    friend bool operator==(const PlacementDecision&, const PlacementDecision&) = default;

private:
    PlacementDecision(std::optional<CloudId> c, std::string r)
        : cloud_(c), reason_(std::move(r)) {}

    std::optional<CloudId> cloud_;
    std::string reason_;
};

/// Signature shared by all placement policies. Policies must be pure: the
/// decision depends only on the arguments, and only `rng` may be advanced.
using PlacementPolicy = std::function<PlacementDecision(
    const ResourceVector& requirement, std::span<const CloudView> clouds, Rng& rng)>;

PlacementDecision place_first_available(const ResourceVector& requirement,
                                        std::span<const CloudView> clouds);
PlacementDecision place_best_fit(const ResourceVector& requirement,
                                 std::span<const CloudView> clouds);
PlacementDecision place_worst_fit(const ResourceVector& requirement,
                                  std::span<const CloudView> clouds);
PlacementDecision place_random_seeded(const ResourceVector& requirement,
                                      std::span<const CloudView> clouds, Rng& rng);

/// Capacity-normalized slack left on a cloud after hosting `requirement`:
/// sum over dimensions of (residual - requirement) / capacity.
double slack_score(const ResourceVector& requirement, const CloudView& cloud);

inline constexpr const char* kFirstAvailable = "first-available-method";
inline constexpr const char* kBestFit = "best-fit";
inline constexpr const char* kWorstFit = "worst-fit";
inline constexpr const char* kRandom = "random";

/// Name -> policy table. Starts with the four built-ins; callers may add their
/// own (e.g. a learned model wrapped in a PlacementPolicy).
class PolicyCatalog {
public:
    PolicyCatalog();

    void add(const std::string& name, PlacementPolicy policy);
    bool contains(const std::string& name) const;
    /// Throws ValidationError naming the known policies when absent.
    const PlacementPolicy& get(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, PlacementPolicy> policies_;
};

}  // namespace slicenet
