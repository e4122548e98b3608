#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "slicenet/error.hpp"
#include "slicenet/report.hpp"

using namespace slicenet;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

void check_node(const LayeredNode& n) {
    if (n.children.empty()) return;
    double s = 0;
    for (const auto& c : n.children) {
        s += c.weight;
        check_node(c);
    }
    CHECK(std::abs(s - n.weight) <= 1e-9);
}

}  // namespace

TEST_CASE("summarize the listing snapshot") {
    auto l = fixtures::listing();
    const auto s = summarize(l.reg.snapshot(), {});
    REQUIRE(s.nfs.size() == 4);
    std::vector<double> util;
    for (const auto& n : s.nfs) util.push_back(n.utilization);
    CHECK(util == std::vector<double>{70, 54, 80, 32});
    CHECK(s.nfs[0].placement == "c1");
    CHECK(s.nfs[1].placement == "c2");
    CHECK(s.clouds[0].utilization[0] == doctest::Approx(0.30).epsilon(1e-12));
    CHECK(s.clouds[0].utilization[1] == doctest::Approx(1.00).epsilon(1e-12));
    CHECK(s.clouds[0].utilization[2] == doctest::Approx(0.2468).epsilon(1e-12));
    CHECK(s.services.empty());
}

TEST_CASE("summarize an empty registry") {
    const auto s = summarize(RegistrySnapshot{}, {});
    CHECK(s.clouds.empty());
    CHECK(s.nfs.empty());
    CHECK(s.slices.empty());
    CHECK(s.services.empty());
}

TEST_CASE("rejection ratio and loads from a trace") {
    auto l = fixtures::listing();
    Service svc = l.reg.make_service("video", 0);
    svc.compose(l.vs.id, 25);
    l.reg.deploy_service(svc);
    Service idle = l.reg.make_service("idle", 0);
    idle.compose(l.vs.id, 1);
    l.reg.deploy_service(idle);

    const auto rec = [&](double t, std::uint64_t id, TraceOutcome o, double load) {
        return TraceRecord{t, SliceletId{id}, svc.id, o, {}, {{l.vs.id, load}}};
    };
    const std::vector<TraceRecord> trace{rec(0, 0, TraceOutcome::Admitted, 25), rec(2, 1, TraceOutcome::Admitted, 50),
                                         rec(4, 2, TraceOutcome::Admitted, 75), rec(6, 3, TraceOutcome::Rejected, 75),
                                         rec(8, 0, TraceOutcome::Departed, 50)};
    const auto s = summarize(l.reg.snapshot(), trace, RunMetadata{1, "first-available-method", "h", 10});
    REQUIRE(s.services.size() == 2);
    CHECK(s.services[0].admitted == 3);
    CHECK(s.services[0].rejected == 1);
    CHECK(s.services[0].rejection_ratio == 0.25);
    CHECK_FALSE(s.services[1].rejection_ratio.has_value());

    const SliceMetrics& vs = s.slices[0];
    CHECK(vs.peak_load == 75);
    // (25*2 + 50*2 + 75*4 + 50*2) / 10
    CHECK(vs.mean_load == doctest::Approx(55.0));
    CHECK(s.slices[1].mean_load == 0);
}

TEST_CASE("nf_slice_chart") {
    auto l = fixtures::listing();
    const auto c = nf_slice_chart(l.nfs[0].id, l.reg.snapshot());
    CHECK(c.kind == ChartKind::NfSliceShares);
    CHECK(c.title == "NF 1");
    CHECK(c.labels == std::vector<std::string>{"Vedio Streaming Slice", "Emergency Slice", "Unused"});
    CHECK(c.weights == std::vector<double>{20, 50, 30});

    auto bare = fixtures::listing(false);
    const auto empty = nf_slice_chart(bare.nfs[0].id, bare.reg.snapshot());
    CHECK(empty.labels == std::vector<std::string>{"Unused"});
    CHECK(empty.weights == std::vector<double>{100});

    StaticSlice fill = l.reg.make_slice("fill");
    fill.compose(l.nfs[2].id, 20);
    l.reg.deploy_slice(fill);
    const auto full = nf_slice_chart(l.nfs[2].id, l.reg.snapshot());
    CHECK(full.labels.back() == "Unused");
    CHECK(full.weights.back() == 0);
    CHECK(sum(full.weights) == 100);

    CHECK_THROWS_AS(nf_slice_chart(NfId{99}, l.reg.snapshot()), ValidationError);
}

TEST_CASE("cloud utilization chart") {
    auto l = fixtures::listing(false);
    const auto c = cloud_utilization_chart(l.reg.snapshot(), Dimension::Memory);
    CHECK(c.labels == std::vector<std::string>{"c1", "c2"});
    CHECK(c.weights == std::vector<double>{1.0, 0.5});
}

TEST_CASE("layered view") {
    auto l = fixtures::listing();
    Service svc = l.reg.make_service("video", 0);
    svc.compose(l.vs.id, 50);
    l.reg.deploy_service(svc);

    const auto views = layered_view(l.reg.snapshot());
    REQUIRE(views.size() == 2);
    const LayeredView& c1 = views[0];
    CHECK(c1.cloud_name == "c1");
    CHECK(c1.rings[0].labels == std::vector<std::string>{"NF 1", "NF 3", "Unused"});
    REQUIRE(c1.rings[0].weights.size() == 3);
    CHECK(c1.rings[0].weights[0] == doctest::Approx(100.0 / 1000).epsilon(1e-12));
    CHECK(c1.rings[0].weights[1] == doctest::Approx(200.0 / 1000).epsilon(1e-12));
    CHECK(c1.rings[0].weights[2] == doctest::Approx(700.0 / 1000).epsilon(1e-12));

    // NF 1 (0.1) splits 20/50/30 across vs, es and unused.
    CHECK(c1.rings[1].labels[0] == "Vedio Streaming Slice");
    CHECK(c1.rings[1].weights[0] == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(c1.rings[1].weights[1] == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(c1.rings[1].weights[2] == doctest::Approx(0.03).epsilon(1e-12));
    // vs segment (0.02) carries the video service at 50%.
    CHECK(c1.rings[2].labels[0] == "video");
    CHECK(c1.rings[2].weights[0] == doctest::Approx(0.01).epsilon(1e-12));

    for (const auto& v : views) {
        check_node(v.root);
        for (const auto& ring : v.rings) CHECK(sum(ring.weights) == doctest::Approx(1.0).epsilon(1e-9));
    }

    const auto mem = layered_view(l.reg.snapshot(), Dimension::Memory);
    CHECK(mem[0].rings[0].weights == std::vector<double>{0.9, 0.1, 0.0});
}

TEST_CASE("layered view edge cases") {
    Registry reg;
    reg.register_cloud(reg.make_cloud("empty", {1, 1, 1}));
    const auto v = layered_view(reg.snapshot());
    REQUIRE(v.size() == 1);
    CHECK(v[0].rings[0].labels == std::vector<std::string>{"Unused"});
    CHECK(v[0].rings[0].weights == std::vector<double>{1.0});

    auto l = fixtures::listing();
    l.reg.undeploy_slice(l.vs.id);
    l.reg.undeploy_slice(l.es.id);
    const auto bare = layered_view(l.reg.snapshot());
    for (const auto& label : bare[0].rings[1].labels) CHECK(label == "Unused");

    // Oversubscribed service declarations are scaled to the slice segment.
    auto o = fixtures::listing();
    for (int i = 0; i < 3; ++i) {
        Service s = o.reg.make_service("s" + std::to_string(i), 0);
        s.compose(o.vs.id, 60);
        o.reg.deploy_service(s);
    }
    for (const auto& view : layered_view(o.reg.snapshot())) check_node(view.root);
}
