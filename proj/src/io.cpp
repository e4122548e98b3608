#include "slicenet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "slicenet/error.hpp"

namespace slicenet {

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        // JSON has no inf/nan; these only appear for unbounded durations.
        return std::isnan(v) ? "null" : (v > 0 ? "1e999" : "-1e999");
    }
    return fmt::format("{:.17g}", v);
}

namespace {

void dump_into(const Json& j, int indent, int depth, std::string& out) {
    const auto newline = [&](int level) {
        if (indent < 0) return;
        out.push_back('\n');
        out.append(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out.push_back('{');
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out.push_back('}');
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out.push_back('[');
            bool first = true;
            for (const auto& v : j) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                dump_into(v, indent, depth + 1, out);
            }
            newline(depth);
            out.push_back(']');
            return;
        }
        case Json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

Json rv_json(const ResourceVector& v) {
    return {{"compute", v.compute()}, {"memory", v.memory()}, {"storage", v.storage()}};
}

Json ratios_json(const std::array<double, kDimensions>& r) {
    return {{"compute", r[0]}, {"memory", r[1]}, {"storage", r[2]}};
}

template <class Key>
Json shares_json(const std::map<Key, double>& m, const char* key_name) {
    Json arr = Json::array();
    for (const auto& [k, pct] : m) arr.push_back({{key_name, k.value}, {"share", pct}});
    return arr;
}

Json node_json(const LayeredNode& n) {
    Json j = {{"kind", n.kind}, {"label", n.label}, {"weight", n.weight}};
    if (n.kind != "unused") j["id"] = n.id;
    if (!n.children.empty()) {
        Json kids = Json::array();
        for (const auto& c : n.children) kids.push_back(node_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

std::string dump_json(const Json& doc, int indent) {
    std::string out;
    dump_into(doc, indent, 0, out);
    return out;
}

Json to_json(const TraceRecord& r) {
    Json loads = Json::array();
    for (const auto& l : r.loads) loads.push_back({{"slice", l.slice_id.value}, {"load", l.active_load}});
    Json j = {{"time", r.time},
              {"slicelet", r.slicelet_id.value},
              {"service", r.service_id.value},
              {"outcome", outcome_name(r.outcome)},
              {"loads", std::move(loads)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    return j;
}

TraceRecord trace_record_from_json(const Json& j) {
    try {
        TraceRecord r;
        r.time = j.at("time").get<double>();
        r.slicelet_id = SliceletId{j.at("slicelet").get<std::uint64_t>()};
        r.service_id = ServiceId{j.at("service").get<std::uint64_t>()};
        r.outcome = parse_outcome(j.at("outcome").get<std::string>());
        r.reason = j.value("reason", std::string{});
        for (const auto& l : j.at("loads")) {
            r.loads.push_back({SliceId{l.at("slice").get<std::uint64_t>()}, l.at("load").get<double>()});
        }
        return r;
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed trace record: ") + e.what());
    }
}

Json to_json(const MetricsSummary& s) {
    Json meta = {{"seed", s.metadata.seed},
                 {"policy", s.metadata.policy},
                 {"scenario_hash", s.metadata.scenario_hash},
                 {"horizon", s.metadata.horizon}};

    Json clouds = Json::array();
    for (const auto& c : s.clouds) {
        clouds.push_back({{"id", c.id.value},
                          {"name", c.name},
                          {"capacity", rv_json(c.capacity)},
                          {"residual", rv_json(c.residual)},
                          {"utilization", ratios_json(c.utilization)}});
    }
    Json nfs = Json::array();
    for (const auto& n : s.nfs) {
        nfs.push_back({{"id", n.id.value},
                       {"name", n.name},
                       {"placement", n.placement ? Json(*n.placement) : Json(nullptr)},
                       {"requirement", rv_json(n.requirement)},
                       {"slice_shares", shares_json(n.slice_shares, "slice")},
                       {"utilization", n.utilization},
                       {"remaining_share", n.remaining}});
    }
    Json slices = Json::array();
    for (const auto& sl : s.slices) {
        slices.push_back({{"id", sl.id.value},
                          {"name", sl.name},
                          {"deployed", sl.deployed},
                          {"composition", shares_json(sl.composition, "nf")},
                          {"mean_load", sl.mean_load},
                          {"peak_load", sl.peak_load}});
    }
    Json services = Json::array();
    for (const auto& sv : s.services) {
        services.push_back({{"id", sv.id.value},
                            {"name", sv.name},
                            {"priority", sv.priority},
                            {"composition", shares_json(sv.composition, "slice")},
                            {"admitted", sv.admitted},
                            {"rejected", sv.rejected},
                            {"departed", sv.departed},
                            {"rejection_ratio", sv.rejection_ratio ? Json(*sv.rejection_ratio) : Json(nullptr)}});
    }
    return {{"metadata", std::move(meta)},
            {"clouds", std::move(clouds)},
            {"nfs", std::move(nfs)},
            {"slices", std::move(slices)},
            {"services", std::move(services)}};
}

Json to_json(const ChartData& c) {
    Json weights = Json::array();
    for (double w : c.weights) weights.push_back(w);
    return {{"kind", chart_kind_name(c.kind)}, {"title", c.title}, {"labels", c.labels}, {"weights", weights}};
}

Json to_json(const LayeredView& v) {
    Json rings = Json::array();
    for (const auto& r : v.rings) rings.push_back(to_json(r));
    return {{"kind", chart_kind_name(ChartKind::LayeredComposition)},
            {"cloud", v.cloud.value},
            {"cloud_name", v.cloud_name},
            {"dimension", dimension_name(v.dimension)},
            {"rings", std::move(rings)},
            {"tree", node_json(v.root)}};
}

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError(path.string(), "read failed");
    return ss.str();
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw IoError(path.string(), "write failed");
}

void write_trace(const fs::path& path, std::span<const TraceRecord> trace) {
    std::string text;
    for (const auto& r : trace) {
        text += dump_json(to_json(r));
        text.push_back('\n');
    }
    write_text_file(path, text);
}

std::vector<TraceRecord> read_trace(const fs::path& path) {
    std::istringstream in(read_text_file(path));
    std::vector<TraceRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(trace_record_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            throw IoError(path.string(), fmt::format("line {}: {}", lineno, e.what()));
        }
    }
    return out;
}

void write_summary(const fs::path& path, const MetricsSummary& summary) {
    write_text_file(path, dump_json(to_json(summary), 2) + "\n");
}

Json read_json_file(const fs::path& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw IoError(path.string(), std::string("invalid JSON: ") + e.what());
    }
}

std::vector<fs::path> write_charts(const fs::path& dir, const RegistrySnapshot& snapshot,
                                   Dimension layered_dimension) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(dir.string(), "cannot create directory: " + ec.message());

    std::vector<fs::path> written;
    const auto emit = [&](const std::string& file, const Json& doc) {
        const fs::path p = dir / file;
        write_text_file(p, dump_json(doc, 2) + "\n");
        written.push_back(p);
    };
    for (const auto& [id, nf] : snapshot.nfs) {
        emit(fmt::format("nf_{}.json", id.value), to_json(nf_slice_chart(id, snapshot)));
    }
    for (int d = 0; d < kDimensions; ++d) {
        const auto dim = static_cast<Dimension>(d);
        emit(fmt::format("cloud_utilization_{}.json", dimension_name(dim)),
             to_json(cloud_utilization_chart(snapshot, dim)));
    }
    for (const auto& view : layered_view(snapshot, layered_dimension)) {
        emit(fmt::format("layered_{}.json", view.cloud.value), to_json(view));
    }
    return written;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return fmt::format("{:016x}", h);
}

}  // namespace slicenet
