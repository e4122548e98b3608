#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "slicenet/model.hpp"
#include "slicenet/registry.hpp"

namespace slicenet {

struct AdmissionResult {
    bool admit = true;
    std::optional<SliceId> violating;

    friend bool operator==(const AdmissionResult&, const AdmissionResult&) = default;
};

/// Admit iff every slice s of the composition satisfies
/// loads[s] + share(s) <= 100 + eps. Names the first violating slice in slice
/// id order. Throws ValidationError if a composed slice is missing in `loads`.
AdmissionResult admission_check(const Service& service,
                                const std::map<SliceId, double>& loads);

enum class TraceOutcome { Admitted, Rejected, Departed };

const char* outcome_name(TraceOutcome o);
TraceOutcome parse_outcome(const std::string& name);

struct SliceLoad {
    SliceId slice_id;
    double active_load = 0;

    friend bool operator==(const SliceLoad&, const SliceLoad&) = default;
};

struct TraceRecord {
    double time = 0;
    SliceletId slicelet_id;
    ServiceId service_id;
    TraceOutcome outcome = TraceOutcome::Admitted;
    std::string reason;
    /// Loads of the slices composing the service, after the event.
    std::vector<SliceLoad> loads;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct ServiceInstance {
    SliceletId slicelet_id;
    ServiceId service_id;
    std::map<SliceId, double> held_shares;
    double admitted_at = 0;
};

/// Discrete-event loop applying slicelet arrivals and departures to a
/// registry as a loss system: an arrival either fits on every slice its
/// service composes or it is dropped.
///
/// Equal-time ordering: departures first, then arrivals by service priority
/// (lower value first), then creation sequence.
class Engine {
public:
    explicit Engine(Registry& registry) : registry_(registry) {}

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    void schedule_slicelet(const Slicelet& s);

    /// Processes every queued event with time <= until and advances the clock
    /// to `until`. Returns the records produced by this call.
    std::vector<TraceRecord> run(double until);

    double clock() const noexcept { return clock_; }
    std::size_t pending_events() const noexcept { return queue_.size(); }
    std::size_t active_count() const noexcept { return active_.size(); }
    const std::map<SliceletId, ServiceInstance>& active() const noexcept { return active_; }

    double slice_load(SliceId slice) const;
    /// Current load of every deployed slice.
    std::map<SliceId, double> loads() const;

private:
    enum class Kind : int { Departure = 0, Arrival = 1 };

    struct Event {
        double time;
        Kind kind;
        int priority;
        std::uint64_t seq;
        SliceletId slicelet;
    };

    struct Later {
        bool operator()(const Event& a, const Event& b) const noexcept;
    };

    void push(double time, Kind kind, int priority, SliceletId id);
    TraceRecord on_arrival(const Event& ev);
    TraceRecord on_departure(const Event& ev);
    std::vector<SliceLoad> loads_for(const std::map<SliceId, double>& composition) const;

    Registry& registry_;
    double clock_ = 0;
    std::uint64_t next_seq_ = 0;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::map<SliceletId, Slicelet> pending_;
    std::map<SliceletId, ServiceInstance> active_;
    /// slice -> service -> number of active instances.
    std::map<SliceId, std::map<ServiceId, std::uint64_t>> instance_counts_;
};

}  // namespace slicenet
