#pragma once

#include <string>
#include <vector>

#include "slicenet/registry.hpp"

namespace fixtures {

/// The two-cloud, four-NF, two-slice topology used throughout the tests.
struct Listing {
    slicenet::Registry reg;
    std::vector<slicenet::CloudId> clouds;
    std::vector<slicenet::Nf> nfs;
    std::vector<slicenet::PlacementDecision> placements;
    slicenet::StaticSlice vs;
    slicenet::StaticSlice es;
};

inline void deploy_topology(Listing& l) {
    using namespace slicenet;
    l.clouds.push_back(l.reg.register_cloud(l.reg.make_cloud("c1", {1000, 10, 10000})));
    l.clouds.push_back(l.reg.register_cloud(l.reg.make_cloud("c2", {2000, 20, 20000})));
    l.reg.set_scheduler_policy(kFirstAvailable);
    l.nfs.push_back(l.reg.make_nf("NF 1", {100, 9, 1234}));
    l.nfs.push_back(l.reg.make_nf("NF 2", {100, 9, 1234}));
    l.nfs.push_back(l.reg.make_nf("NF 3", {200, 1, 1234}));
    l.nfs.push_back(l.reg.make_nf("NF 4", {200, 1, 1234}));
    for (const auto& nf : l.nfs) l.placements.push_back(l.reg.deploy_nf(nf));
}

inline void deploy_slices(Listing& l) {
    l.vs = l.reg.make_slice("Vedio Streaming Slice");
    for (const auto& nf : l.nfs) l.vs.compose(nf.id, 20);
    l.es = l.reg.make_slice("Emergency Slice");
    const double es_shares[] = {50, 34, 60, 12};
    for (std::size_t i = 0; i < l.nfs.size(); ++i) l.es.compose(l.nfs[i].id, es_shares[i]);
    l.reg.deploy_slice(l.vs);
    l.reg.deploy_slice(l.es);
}

inline Listing listing(bool with_slices = true) {
    Listing l;
    deploy_topology(l);
    if (with_slices) deploy_slices(l);
    return l;
}

}  // namespace fixtures
