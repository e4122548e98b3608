#include "slicenet/policy.hpp"

#include <fmt/format.h>

#include "slicenet/error.hpp"

namespace slicenet {

namespace {

std::vector<const CloudView*> feasible(const ResourceVector& req, std::span<const CloudView> clouds) {
    std::vector<const CloudView*> out;
    for (const auto& c : clouds) {
        if (rv_fits_within(req, c.residual)) out.push_back(&c);
    }
    return out;
}

PlacementDecision none_fits(const ResourceVector& req, std::span<const CloudView> clouds) {
    if (clouds.empty()) return PlacementDecision::rejected("no clouds registered");
    return PlacementDecision::rejected("no cloud has residual capacity for " + to_string(req));
}

// Picks by score; ties go to the lowest registration index.
template <class Better>
PlacementDecision by_score(const ResourceVector& req, std::span<const CloudView> clouds,
                           Better better) {
    const CloudView* best = nullptr;
    double best_score = 0;
    for (const CloudView* c : feasible(req, clouds)) {
        const double score = slack_score(req, *c);
        if (best == nullptr || better(score, best_score) ||
            (score == best_score && c->registration_index < best->registration_index)) {
            best = c;
            best_score = score;
        }
    }
    if (best == nullptr) return none_fits(req, clouds);
    return PlacementDecision::placed(best->cloud_id);
}

}  // namespace

double slack_score(const ResourceVector& requirement, const CloudView& cloud) {
    double score = 0;
    for (int d = 0; d < kDimensions; ++d) {
        score += (cloud.residual.at(d) - requirement.at(d)) / cloud.capacity.at(d);
    }
    return score;
}

PlacementDecision place_first_available(const ResourceVector& requirement,
                                        std::span<const CloudView> clouds) {
    const CloudView* first = nullptr;
    for (const CloudView* c : feasible(requirement, clouds)) {
        if (first == nullptr || c->registration_index < first->registration_index) first = c;
    }
    if (first == nullptr) return none_fits(requirement, clouds);
    return PlacementDecision::placed(first->cloud_id);
}

PlacementDecision place_best_fit(const ResourceVector& requirement,
                                 std::span<const CloudView> clouds) {
    return by_score(requirement, clouds, [](double a, double b) { return a < b; });
}

PlacementDecision place_worst_fit(const ResourceVector& requirement,
                                  std::span<const CloudView> clouds) {
    return by_score(requirement, clouds, [](double a, double b) { return a > b; });
}

PlacementDecision place_random_seeded(const ResourceVector& requirement,
                                      std::span<const CloudView> clouds, Rng& rng) {
    auto options = feasible(requirement, clouds);
    if (options.empty()) return none_fits(requirement, clouds);
    return PlacementDecision::placed(options[rng.uniform_index(options.size())]->cloud_id);
}

PolicyCatalog::PolicyCatalog() {
    add(kFirstAvailable, [](const ResourceVector& r, std::span<const CloudView> c, Rng&) {
        return place_first_available(r, c);
    });
    add(kBestFit, [](const ResourceVector& r, std::span<const CloudView> c, Rng&) {
        return place_best_fit(r, c);
    });
    add(kWorstFit, [](const ResourceVector& r, std::span<const CloudView> c, Rng&) {
        return place_worst_fit(r, c);
    });
    add(kRandom, place_random_seeded);
}

void PolicyCatalog::add(const std::string& name, PlacementPolicy policy) {
    if (name.empty()) throw ValidationError("policy name must not be empty");
    if (!policy) throw ValidationError("policy '" + name + "' has no callable");
    policies_[name] = std::move(policy);
}

bool PolicyCatalog::contains(const std::string& name) const {
    return policies_.count(name) != 0;
}

const PlacementPolicy& PolicyCatalog::get(const std::string& name) const {
    auto it = policies_.find(name);
    if (it == policies_.end()) {
        throw ValidationError(fmt::format("unknown scheduler policy '{}' (known: {})", name,
                                          fmt::join(names(), ", ")));
    }
    return it->second;
}

std::vector<std::string> PolicyCatalog::names() const {
    std::vector<std::string> out;
    for (const auto& [name, p] : policies_) out.push_back(name);
    return out;
}

}  // namespace slicenet
