#include "slicenet/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "slicenet/error.hpp"
#include "slicenet/rng.hpp"

namespace slicenet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool positive_finite(double v) { return std::isfinite(v) && v > 0; }

ServiceId resolve(const Registry& registry, const std::string& name) {
    auto id = registry.find_service(name);
    if (!id) throw ValidationError("workload references unknown service '" + name + "'");
    return *id;
}

}  // namespace

void validate_workload(const WorkloadSpec& spec) {
    std::visit(overloaded{
                   [](const ExplicitWorkload& w) {
                       for (std::size_t i = 0; i < w.entries.size(); ++i) {
                           const auto& e = w.entries[i];
                           if (!std::isfinite(e.arrival) || e.arrival < 0) {
                               throw ValidationError(fmt::format("entry {}: arrival must be finite and >= 0", i));
                           }
                           if (!(e.duration > 0)) {
                               throw ValidationError(fmt::format("entry {}: duration must be > 0", i));
                           }
                       }
                   },
                   [](const PoissonWorkload& w) {
                       if (!positive_finite(w.rate)) throw ValidationError("poisson rate must be finite and > 0");
                       if (!positive_finite(w.mean_duration)) {
                           throw ValidationError("poisson mean_duration must be finite and > 0");
                       }
                       if (!positive_finite(w.horizon)) throw ValidationError("poisson horizon must be finite and > 0");
                   },
               },
               spec.kind);
}

std::vector<Slicelet> materialize(const WorkloadSpec& spec, const Registry& registry) {
    validate_workload(spec);
    std::vector<Slicelet> out;
    std::visit(overloaded{
                   [&](const ExplicitWorkload& w) {
                       out.reserve(w.entries.size());
                       for (const auto& e : w.entries) {
                           out.push_back(Slicelet{SliceletId{out.size()}, resolve(registry, e.service),
                                                  e.arrival, e.duration});
                       }
                   },
                   [&](const PoissonWorkload& w) {
                       const ServiceId svc = resolve(registry, w.service);
                       const double departure_rate = 1.0 / w.mean_duration;
                       Rng rng(spec.seed);
                       double t = 0;
                       for (;;) {
                           t += rng.exponential(w.rate);
                           if (t > w.horizon) break;
                           const double duration = rng.exponential(departure_rate);
                           // A zero draw is possible only when u == 0; keep durations strictly positive.
                           out.push_back(Slicelet{SliceletId{out.size()}, svc, t,
                                                  duration > 0 ? duration : w.mean_duration * 0x1.0p-53});
                       }
                   },
               },
               spec.kind);
    return out;
}

std::vector<Slicelet> materialize_all(std::span<const WorkloadSpec> specs, const Registry& registry,
                                      std::uint64_t master_seed) {
    struct Tagged {
        Slicelet s;
        std::size_t spec;
        std::size_t pos;
    };
    std::vector<Tagged> all;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        WorkloadSpec seeded = specs[i];
        seeded.seed = derive_stream_seed(master_seed, i);
        auto part = materialize(seeded, registry);
        for (std::size_t j = 0; j < part.size(); ++j) all.push_back({part[j], i, j});
    }
    std::stable_sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
        if (a.s.arrival != b.s.arrival) return a.s.arrival < b.s.arrival;
        if (a.spec != b.spec) return a.spec < b.spec;
        return a.pos < b.pos;
    });
    std::vector<Slicelet> out;
    out.reserve(all.size());
    for (auto& t : all) {
        t.s.id = SliceletId{out.size()};
        out.push_back(t.s);
    }
    return out;
}

}  // namespace slicenet
