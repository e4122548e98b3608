#include <doctest.h>

#include <limits>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "slicenet/engine.hpp"
#include "slicenet/error.hpp"

using namespace slicenet;

namespace {

struct World {
    fixtures::Listing l = fixtures::listing();
    Service svc;

    explicit World(double share = 60, int priority = 0) {
        svc = l.reg.make_service("video", priority);
        svc.compose(l.vs.id, share);
        REQUIRE(l.reg.deploy_service(svc).deployed);
    }

    Slicelet slicelet(std::uint64_t id, double arrival, double duration) const {
        return Slicelet{SliceletId{id}, svc.id, arrival, duration};
    }
};

}  // namespace

TEST_CASE("admission_check") {
    Service s{ServiceId{0}, "s", 0, {{SliceId{1}, 50}}};
    CHECK(admission_check(s, {{SliceId{1}, 50}}).admit);
    const auto r = admission_check(s, {{SliceId{1}, 51}});
    CHECK_FALSE(r.admit);
    CHECK(r.violating == SliceId{1});

    Service two{ServiceId{0}, "two", 0, {{SliceId{1}, 30}, {SliceId{2}, 30}}};
    CHECK(admission_check(two, {{SliceId{1}, 0}, {SliceId{2}, 80}}).violating == SliceId{2});
    CHECK(admission_check(two, {{SliceId{1}, 80}, {SliceId{2}, 80}}).violating == SliceId{1});
    CHECK_THROWS_AS(admission_check(two, {{SliceId{1}, 0}}), ValidationError);
}

TEST_CASE("loss-system admission and departure") {
    World w;
    Engine e(w.l.reg);
    e.schedule_slicelet(w.slicelet(0, 0, 10));
    e.schedule_slicelet(w.slicelet(1, 5, 10));
    e.schedule_slicelet(w.slicelet(2, 11, 10));
    const auto trace = e.run(12);
    REQUIRE(trace.size() == 4);
    CHECK(trace[0].outcome == TraceOutcome::Admitted);
    CHECK(trace[0].loads.at(0).active_load == 60);
    CHECK(trace[1].outcome == TraceOutcome::Rejected);
    CHECK(trace[1].slicelet_id == SliceletId{1});
    CHECK(trace[1].loads.at(0).active_load == 60);
    CHECK(trace[2].outcome == TraceOutcome::Departed);
    CHECK(trace[2].time == 10);
    CHECK(trace[2].loads.at(0).active_load == 0);
    CHECK(trace[3].outcome == TraceOutcome::Admitted);
    CHECK(trace[3].slicelet_id == SliceletId{2});
    CHECK(e.clock() == 12);
    CHECK(e.slice_load(w.l.vs.id) == 60);
    CHECK(w.l.reg.active_instances(w.svc.id) == 1);
    CHECK_THROWS_AS(w.l.reg.undeploy_service(w.svc.id), StateError);
}

TEST_CASE("departure before arrival at equal time") {
    World w(60);
    Engine e(w.l.reg);
    e.schedule_slicelet(w.slicelet(0, 0, 10));
    e.schedule_slicelet(w.slicelet(1, 10, 5));
    const auto trace = e.run(20);
    REQUIRE(trace.size() == 4);
    CHECK(trace[1].outcome == TraceOutcome::Departed);
    CHECK(trace[2].outcome == TraceOutcome::Admitted);
    CHECK(trace[2].slicelet_id == SliceletId{1});
}

TEST_CASE("equal-time arrivals: priority, then sequence") {
    auto l = fixtures::listing();
    Service low = l.reg.make_service("low", 5);
    low.compose(l.vs.id, 60);
    Service high = l.reg.make_service("high", 0);
    high.compose(l.vs.id, 60);
    l.reg.deploy_service(low);
    l.reg.deploy_service(high);
    Engine e(l.reg);
    e.schedule_slicelet({SliceletId{0}, low.id, 1, 5});
    e.schedule_slicelet({SliceletId{1}, high.id, 1, 5});
    e.schedule_slicelet({SliceletId{2}, high.id, 1, 5});
    const auto trace = e.run(2);
    REQUIRE(trace.size() == 3);
    CHECK(trace[0].slicelet_id == SliceletId{1});
    CHECK(trace[0].outcome == TraceOutcome::Admitted);
    CHECK(trace[1].slicelet_id == SliceletId{2});
    CHECK(trace[1].outcome == TraceOutcome::Rejected);
    CHECK(trace[2].slicelet_id == SliceletId{0});
    CHECK(trace[2].outcome == TraceOutcome::Rejected);
}

TEST_CASE("schedule_slicelet errors") {
    World w;
    Engine e(w.l.reg);
    CHECK(e.run(5).empty());
    CHECK(e.clock() == 5);
    CHECK_THROWS_AS(e.schedule_slicelet(w.slicelet(0, 4, 1)), StateError);
    CHECK_THROWS_AS(e.schedule_slicelet(w.slicelet(0, 6, 0)), ValidationError);
    CHECK_THROWS_AS(e.schedule_slicelet({SliceletId{0}, ServiceId{42}, 6, 1}), ValidationError);
    e.schedule_slicelet(w.slicelet(0, 6, 1));
    CHECK_THROWS_AS(e.schedule_slicelet(w.slicelet(0, 7, 1)), StateError);
    CHECK(e.pending_events() == 1);
    CHECK_THROWS_AS(e.run(4), StateError);
}

TEST_CASE("multi-slice admission is atomic") {
    auto l = fixtures::listing();
    Service both = l.reg.make_service("both", 0);
    both.compose(l.vs.id, 30);
    both.compose(l.es.id, 30);
    Service es_heavy = l.reg.make_service("es-heavy", 0);
    es_heavy.compose(l.es.id, 80);
    l.reg.deploy_service(both);
    l.reg.deploy_service(es_heavy);
    Engine e(l.reg);
    e.schedule_slicelet({SliceletId{0}, es_heavy.id, 0, 100});
    e.schedule_slicelet({SliceletId{1}, both.id, 1, 100});
    const auto trace = e.run(2);
    CHECK(trace[1].outcome == TraceOutcome::Rejected);
    CHECK(e.slice_load(l.vs.id) == 0);
    CHECK(e.slice_load(l.es.id) == 80);
}

TEST_CASE("infinite durations reduce to a single bin of size 100") {
    Rng gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto l = fixtures::listing();
        const std::size_t n = 1 + gen.uniform_index(10);
        std::vector<double> sizes;
        std::vector<Service> services;
        for (std::size_t i = 0; i < n; ++i) {
            sizes.push_back(static_cast<double>(1 + gen.uniform_index(60)));
            Service s = l.reg.make_service("s" + std::to_string(i), 0);
            s.compose(l.vs.id, sizes.back());
            REQUIRE(l.reg.deploy_service(s).deployed);
            services.push_back(s);
        }
        Engine e(l.reg);
        for (std::size_t i = 0; i < n; ++i) {
            e.schedule_slicelet({SliceletId{i}, services[i].id, static_cast<double>(i),
                                 std::numeric_limits<double>::infinity()});
        }
        const auto trace = e.run(1e9);
        const auto expected = oracle::greedy_bin(sizes);
        REQUIRE(trace.size() == n);
        for (std::size_t i = 0; i < n; ++i) CHECK((trace[i].outcome == TraceOutcome::Admitted) == expected[i]);
        CHECK(e.pending_events() == 0);
    }
}

TEST_CASE("random workloads keep loads bounded and flow conserved") {
    Rng gen(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto l = fixtures::listing();
        std::vector<Service> services;
        for (int i = 0; i < 3; ++i) {
            Service s = l.reg.make_service("s" + std::to_string(i), static_cast<int>(gen.uniform_index(3)));
            s.compose(l.vs.id, 5 + gen.uniform01() * 40);
            if (gen.uniform01() < 0.5) s.compose(l.es.id, 5 + gen.uniform01() * 40);
            l.reg.deploy_service(s);
            services.push_back(s);
        }
        Engine e(l.reg);
        double t = 0;
        for (std::uint64_t i = 0; i < 400; ++i) {
            t += gen.exponential(1.0);
            e.schedule_slicelet({SliceletId{i}, services[gen.uniform_index(3)].id, t, gen.exponential(0.2)});
        }
        const auto trace = e.run(t + 1000);
        long active = 0;
        double last = 0;
        for (const auto& r : trace) {
            CHECK(r.time >= last);
            last = r.time;
            if (r.outcome == TraceOutcome::Admitted) ++active;
            if (r.outcome == TraceOutcome::Departed) --active;
            CHECK(active >= 0);
            for (const auto& sl : r.loads) {
                CHECK(sl.active_load >= 0);
                CHECK(sl.active_load <= 100 + kShareEpsilon);
            }
        }
        CHECK(active == 0);
        CHECK(e.active_count() == 0);
        for (const auto& [id, load] : e.loads()) CHECK(load == 0);
        CHECK(l.reg.snapshot().active_instances.empty());
    }
}
