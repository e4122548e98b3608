#include "slicenet/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "slicenet/io.hpp"
#include "slicenet/workload.hpp"

namespace slicenet {

namespace {

// Stream index reserved for the random placement policy; workload streams use 0..n-1.
constexpr std::uint64_t kPolicyStream = ~std::uint64_t{0};

}  // namespace

RunResult execute_scenario(const Scenario& scenario, const RunOverrides& overrides) {
    RunResult result;
    Registry& reg = result.registry;
    const std::uint64_t seed = overrides.seed.value_or(scenario.run.seed);
    const std::string policy = overrides.policy.value_or(scenario.policy);
    result.out_dir = overrides.out_dir.value_or(std::filesystem::path(scenario.output.directory));

    for (const auto& c : scenario.clouds) {
        reg.register_cloud(reg.make_cloud(c.name, ResourceVector(c.compute, c.memory, c.storage)));
    }
    reg.set_scheduler_policy(policy);
    reg.seed_policy_rng(derive_stream_seed(seed, kPolicyStream));

    std::map<std::string, NfId> nf_ids;
    for (const auto& n : scenario.nfs) {
        Nf nf = reg.make_nf(n.name, ResourceVector(n.compute, n.memory, n.storage));
        const PlacementDecision d = reg.deploy_nf(nf);
        if (!d.is_placed()) throw SetupError("NF '" + n.name + "' could not be placed: " + d.reason());
        nf_ids.emplace(n.name, nf.id);
    }

    std::map<std::string, SliceId> slice_ids;
    for (const auto& sd : scenario.slices) {
        StaticSlice slice = reg.make_slice(sd.name);
        for (const auto& [nf, pct] : sd.composition) slice.compose(nf_ids.at(nf), pct);
        const DeployOutcome o = reg.deploy_slice(slice);
        if (!o) throw SetupError("slice '" + sd.name + "' was rejected: " + o.reason);
        slice_ids.emplace(sd.name, slice.id);
    }

    for (const auto& sv : scenario.services) {
        Service svc = reg.make_service(sv.name, sv.priority);
        for (const auto& [slice, pct] : sv.composition) svc.compose(slice_ids.at(slice), pct);
        const DeployOutcome o = reg.deploy_service(svc);
        if (!o) throw SetupError("service '" + sv.name + "' was rejected: " + o.reason);
    }

    const auto slicelets = materialize_all(scenario.workloads, reg, seed);
    Engine engine(reg);
    for (const auto& s : slicelets) engine.schedule_slicelet(s);
    result.trace = engine.run(scenario.run.until);

    result.summary = summarize(reg.snapshot(), result.trace,
                               RunMetadata{seed, policy, scenario.source_hash, scenario.run.until});
    return result;
}

void write_outputs(const RunResult& result, const Scenario& scenario) {
    std::error_code ec;
    std::filesystem::create_directories(result.out_dir, ec);
    if (ec) throw IoError(result.out_dir.string(), "cannot create output directory: " + ec.message());
    if (scenario.output.summary) write_summary(result.out_dir / "summary.json", result.summary);
    if (scenario.output.trace) write_trace(result.out_dir / "trace.jsonl", result.trace);
    if (scenario.output.charts) {
        write_charts(result.out_dir / "charts", result.registry.snapshot(), scenario.output.layered_dimension);
    }
}

namespace {

void print_diagnostics(const std::vector<Diagnostic>& diags, std::ostream& out) {
    for (const auto& d : diags) out << to_string(d) << '\n';
}

void render_ratio_row(std::ostream& out, const Json& c) {
    const Json& u = c.at("utilization");
    fmt::print(out, "  {:<20} {:>10.4f} {:>10.4f} {:>10.4f}\n", c.at("name").get<std::string>(),
               u.at("compute").get<double>(), u.at("memory").get<double>(), u.at("storage").get<double>());
}

}  // namespace

int validate_command(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
    try {
        const auto diags = validate(path);
        print_diagnostics(diags, has_errors(diags) ? err : out);
        if (has_errors(diags)) return kExitValidation;
        out << path.string() << ": ok\n";
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        err << "error: " << path.string() << ": " << e.what() << '\n';
        return kExitValidation;
    }
}

int run_command(const std::filesystem::path& path, const RunOverrides& overrides, std::ostream& out,
                std::ostream& err) {
    LoadedScenario loaded;
    try {
        loaded = load_scenario_file(path);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        err << "error: " << path.string() << ": " << e.what() << '\n';
        return kExitValidation;
    }
    if (overrides.policy && !PolicyCatalog().contains(*overrides.policy)) {
        loaded.diagnostics.push_back({Severity::Error, "--policy",
                                      fmt::format("unknown scheduler policy '{}' (known: {})", *overrides.policy,
                                                  fmt::join(PolicyCatalog().names(), ", "))});
    }
    if (has_errors(loaded.diagnostics)) {
        print_diagnostics(loaded.diagnostics, err);
        return kExitValidation;
    }
    print_diagnostics(loaded.diagnostics, err);

    RunResult result;
    try {
        result = execute_scenario(loaded.scenario, overrides);
    } catch (const SetupError& e) {
        err << "setup rejected: " << e.what() << '\n';
        return kExitSetupRejected;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    try {
        write_outputs(result, loaded.scenario);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }

    std::uint64_t admitted = 0, rejected = 0;
    for (const auto& s : result.summary.services) {
        admitted += s.admitted;
        rejected += s.rejected;
    }
    fmt::print(out, "{}: {} NF(s) placed, {} slice(s), {} service(s); {} admitted, {} rejected -> {}\n",
               path.string(), result.summary.nfs.size(), result.summary.slices.size(),
               result.summary.services.size(), admitted, rejected, result.out_dir.string());
    return kExitOk;
}

int report_command(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
    Json summary;
    std::vector<TraceRecord> trace;
    try {
        summary = read_json_file(dir / "summary.json");
        trace = read_trace(dir / "trace.jsonl");
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }

    try {
        const Json& meta = summary.at("metadata");
        fmt::print(out, "policy {}  seed {}  horizon {}  scenario {}\n\n", meta.at("policy").get<std::string>(),
                   meta.at("seed").get<std::uint64_t>(), meta.at("horizon").get<double>(),
                   meta.at("scenario_hash").get<std::string>());

        fmt::print(out, "Clouds (utilization ratio)\n  {:<20} {:>10} {:>10} {:>10}\n", "name", "compute", "memory",
                   "storage");
        for (const auto& c : summary.at("clouds")) render_ratio_row(out, c);

        std::map<std::uint64_t, std::string> slice_names;
        for (const auto& s : summary.at("slices")) slice_names[s.at("id").get<std::uint64_t>()] = s.at("name");

        fmt::print(out, "\nNFs\n  {:<20} {:<12} {:>8} {:>8}  shares\n", "name", "cloud", "used %", "free %");
        for (const auto& n : summary.at("nfs")) {
            std::string shares;
            for (const auto& sh : n.at("slice_shares")) {
                if (!shares.empty()) shares += ", ";
                shares += fmt::format("{}={}", slice_names[sh.at("slice").get<std::uint64_t>()],
                                      sh.at("share").get<double>());
            }
            const Json& pl = n.at("placement");
            fmt::print(out, "  {:<20} {:<12} {:>8.2f} {:>8.2f}  {}\n", n.at("name").get<std::string>(),
                       pl.is_null() ? "-" : pl.get<std::string>(), n.at("utilization").get<double>(),
                       n.at("remaining_share").get<double>(), shares);
        }

        fmt::print(out, "\nSlices\n  {:<28} {:>10} {:>10}\n", "name", "mean load", "peak load");
        for (const auto& s : summary.at("slices")) {
            fmt::print(out, "  {:<28} {:>10.3f} {:>10.3f}\n", s.at("name").get<std::string>(),
                       s.at("mean_load").get<double>(), s.at("peak_load").get<double>());
        }

        // Counts come from the trace itself so the table reflects what was recorded.
        std::map<std::uint64_t, std::array<std::uint64_t, 3>> counts;
        std::map<std::uint64_t, std::string> service_names;
        for (const auto& s : summary.at("services")) {
            const auto id = s.at("id").get<std::uint64_t>();
            service_names[id] = s.at("name");
            counts[id];
        }
        for (const auto& r : trace) ++counts[r.service_id.value][static_cast<int>(r.outcome)];

        fmt::print(out, "\nServices\n  {:<28} {:>9} {:>9} {:>9} {:>10}\n", "name", "admitted", "rejected",
                   "departed", "rej. ratio");
        for (const auto& [id, c] : counts) {
            const auto arrivals = c[0] + c[1];
            const std::string ratio =
                arrivals ? fmt::format("{:.4f}", static_cast<double>(c[1]) / static_cast<double>(arrivals)) : "-";
            const auto name = service_names.count(id) ? service_names[id] : fmt::format("service {}", id);
            fmt::print(out, "  {:<28} {:>9} {:>9} {:>9} {:>10}\n", name, c[0], c[1], c[2], ratio);
        }
        fmt::print(out, "\n{} trace record(s)\n", trace.size());
    } catch (const Json::exception& e) {
        err << "error: " << (dir / "summary.json").string() << ": malformed summary: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int run_batch(const std::vector<std::filesystem::path>& paths, const RunOverrides& overrides, unsigned jobs,
              std::ostream& out, std::ostream& err) {
    if (paths.size() == 1) return run_command(paths.front(), overrides, out, err);

    std::vector<int> codes(paths.size(), kExitOk);
    std::vector<std::string> outs(paths.size()), errs(paths.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < paths.size(); i = next++) {
            RunOverrides local = overrides;
            if (overrides.out_dir) local.out_dir = *overrides.out_dir / paths[i].stem();
            std::ostringstream o, e;
            codes[i] = run_command(paths[i], local, o, e);
            outs[i] = o.str();
            errs[i] = e.str();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < paths.size(); ++i) {
        out << outs[i];
        err << errs[i];
    }
    return *std::max_element(codes.begin(), codes.end());
}

}  // namespace slicenet
