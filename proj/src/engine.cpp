#include "slicenet/engine.hpp"

#include <cmath>
#include <fmt/format.h>

#include "slicenet/error.hpp"

namespace slicenet {

AdmissionResult admission_check(const Service& service, const std::map<SliceId, double>& loads) {
    AdmissionResult result;
    for (const auto& [slice, share] : service.composition) {
        auto it = loads.find(slice);
        if (it == loads.end()) {
            throw ValidationError(fmt::format("admission check for service '{}': no load for slice {}",
                                              service.name, slice.value));
        }
        if (result.admit && it->second + share > 100.0 + kShareEpsilon) {
            result.admit = false;
            result.violating = slice;
        }
    }
    return result;
}

const char* outcome_name(TraceOutcome o) {
    switch (o) {
        case TraceOutcome::Admitted: return "admitted";
        case TraceOutcome::Rejected: return "rejected";
        case TraceOutcome::Departed: return "departed";
    }
    return "?";
}

TraceOutcome parse_outcome(const std::string& name) {
    if (name == "admitted") return TraceOutcome::Admitted;
    if (name == "rejected") return TraceOutcome::Rejected;
    if (name == "departed") return TraceOutcome::Departed;
    throw ValidationError("unknown trace outcome '" + name + "'");
}

bool Engine::Later::operator()(const Event& a, const Event& b) const noexcept {
    if (a.time != b.time) return a.time > b.time;
    if (a.kind != b.kind) return a.kind > b.kind;
    if (a.priority != b.priority) return a.priority > b.priority;
    return a.seq > b.seq;
}

void Engine::push(double time, Kind kind, int priority, SliceletId id) {
    queue_.push(Event{time, kind, priority, next_seq_++, id});
}

void Engine::schedule_slicelet(const Slicelet& s) {
    if (!std::isfinite(s.arrival) || s.arrival < 0) {
        throw ValidationError(fmt::format("slicelet {}: arrival must be finite and >= 0", s.id.value));
    }
    if (!(s.duration > 0)) {
        throw ValidationError(fmt::format("slicelet {}: duration must be > 0", s.id.value));
    }
    if (s.arrival < clock_) {
        throw StateError(fmt::format("slicelet {} arrives at {} which is before the engine clock {}",
                                     s.id.value, s.arrival, clock_));
    }
    if (pending_.count(s.id) || active_.count(s.id)) {
        throw StateError(fmt::format("slicelet {} is already scheduled", s.id.value));
    }
    const Service& svc = registry_.service(s.service_id);
    pending_.emplace(s.id, s);
    push(s.arrival, Kind::Arrival, svc.priority, s.id);
}

std::vector<TraceRecord> Engine::run(double until) {
    if (std::isnan(until) || until < clock_) {
        throw StateError(fmt::format("run horizon {} is before the engine clock {}", until, clock_));
    }
    std::vector<TraceRecord> trace;
    while (!queue_.empty() && queue_.top().time <= until) {
        const Event ev = queue_.top();
        queue_.pop();
        clock_ = ev.time;
        trace.push_back(ev.kind == Kind::Arrival ? on_arrival(ev) : on_departure(ev));
    }
    clock_ = until;
    return trace;
}

TraceRecord Engine::on_arrival(const Event& ev) {
    auto node = pending_.extract(ev.slicelet);
    const Slicelet s = node.mapped();
    TraceRecord rec{ev.time, s.id, s.service_id, TraceOutcome::Rejected, {}, {}};

    auto svc_it = registry_.services().find(s.service_id);
    if (svc_it == registry_.services().end()) {
        rec.reason = fmt::format("service {} is not deployed", s.service_id.value);
        return rec;
    }
    const Service& svc = svc_it->second;

    std::map<SliceId, double> current;
    for (const auto& [slice, share] : svc.composition) current[slice] = slice_load(slice);
    const AdmissionResult decision = admission_check(svc, current);

    if (!decision.admit) {
        const SliceId bad = *decision.violating;
        rec.reason = fmt::format("slice {} load {} + {} exceeds 100", bad.value, current.at(bad),
                                 svc.composition.at(bad));
        rec.loads = loads_for(svc.composition);
        return rec;
    }

    rec.outcome = TraceOutcome::Admitted;
    active_.emplace(s.id, ServiceInstance{s.id, s.service_id, svc.composition, ev.time});
    for (const auto& [slice, share] : svc.composition) ++instance_counts_[slice][s.service_id];
    registry_.pin_service(s.service_id);
    if (std::isfinite(s.duration)) {
        const double leave = s.arrival + s.duration;
        if (std::isfinite(leave)) push(leave, Kind::Departure, 0, s.id);
    }
    rec.loads = loads_for(svc.composition);
    return rec;
}

TraceRecord Engine::on_departure(const Event& ev) {
    auto node = active_.extract(ev.slicelet);
    const ServiceInstance inst = std::move(node.mapped());
    for (const auto& [slice, share] : inst.held_shares) {
        auto& per_service = instance_counts_.at(slice);
        if (--per_service.at(inst.service_id) == 0) per_service.erase(inst.service_id);
        if (per_service.empty()) instance_counts_.erase(slice);
    }
    registry_.unpin_service(inst.service_id);
    TraceRecord rec{ev.time, inst.slicelet_id, inst.service_id, TraceOutcome::Departed, {}, {}};
    rec.loads = loads_for(inst.held_shares);
    return rec;
}

double Engine::slice_load(SliceId slice) const {
    auto it = instance_counts_.find(slice);
    if (it == instance_counts_.end()) return 0;
    double load = 0;
    for (const auto& [svc, count] : it->second) {
        load += static_cast<double>(count) * registry_.service(svc).composition.at(slice);
    }
    return load;
}

std::map<SliceId, double> Engine::loads() const {
    std::map<SliceId, double> out;
    for (const auto& [id, s] : registry_.slices()) out[id] = slice_load(id);
    return out;
}

std::vector<SliceLoad> Engine::loads_for(const std::map<SliceId, double>& composition) const {
    std::vector<SliceLoad> out;
    out.reserve(composition.size());
    for (const auto& [slice, share] : composition) out.push_back({slice, slice_load(slice)});
    return out;
}

}  // namespace slicenet
