#include "slicenet/scenario.hpp"

#include <cmath>
#include <fmt/format.h>
#include <map>
#include <set>

#include "slicenet/io.hpp"
#include "slicenet/policy.hpp"

namespace slicenet {

std::string to_string(const Diagnostic& d) {
    return fmt::format("{}: {}: {}", d.severity == Severity::Error ? "error" : "warning", d.where, d.message);
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) return true;
    }
    return false;
}

namespace {

// Schema reader that records problems instead of stopping at the first one.
class Reader {
public:
    explicit Reader(std::vector<Diagnostic>& diags) : diags_(diags) {}

    void error(const std::string& where, const std::string& msg) {
        diags_.push_back({Severity::Error, where, msg});
    }

    const Json* field(const Json& obj, const std::string& key, const std::string& where, bool required) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) error(where, "missing field '" + key + "'");
            return nullptr;
        }
        return &*it;
    }

    double number(const Json& obj, const std::string& key, const std::string& where, bool required = true,
                  double fallback = 0) {
        const Json* v = field(obj, key, where, required);
        if (!v) return fallback;
        if (!v->is_number()) {
            error(where + "." + key, "expected a number");
            return fallback;
        }
        return v->get<double>();
    }

    std::string string(const Json& obj, const std::string& key, const std::string& where, bool required = true,
                       std::string fallback = {}) {
        const Json* v = field(obj, key, where, required);
        if (!v) return fallback;
        if (!v->is_string()) {
            error(where + "." + key, "expected a string");
            return fallback;
        }
        return v->get<std::string>();
    }

    const Json* array(const Json& obj, const std::string& key, const std::string& where) {
        const Json* v = field(obj, key, where, false);
        if (!v) return nullptr;
        if (!v->is_array()) {
            error(where + key, "expected an array");
            return nullptr;
        }
        return v;
    }

    bool object(const Json& v, const std::string& where) {
        if (!v.is_object()) {
            error(where, "expected an object");
            return false;
        }
        return true;
    }

    std::vector<std::pair<std::string, double>> composition(const Json& obj, const std::string& key,
                                                            const char* ref_key, const std::string& where) {
        std::vector<std::pair<std::string, double>> out;
        const Json* v = field(obj, key, where, true);
        if (!v) return out;
        const std::string here = where + "." + key;
        if (v->is_object()) {
            for (auto it = v->begin(); it != v->end(); ++it) {
                if (!it.value().is_number()) {
                    error(here + "[" + it.key() + "]", "expected a number");
                    continue;
                }
                out.emplace_back(it.key(), it.value().get<double>());
            }
        } else if (v->is_array()) {
            for (std::size_t i = 0; i < v->size(); ++i) {
                const Json& e = (*v)[i];
                const std::string w = fmt::format("{}[{}]", here, i);
                if (!object(e, w)) continue;
                out.emplace_back(string(e, ref_key, w), number(e, "share", w));
            }
        } else {
            error(here, "expected an object of name -> percentage or an array of entries");
        }
        return out;
    }

private:
    std::vector<Diagnostic>& diags_;
};

std::vector<ResourceDecl> read_resources(Reader& rd, const Json& root, const std::string& section) {
    std::vector<ResourceDecl> out;
    const Json* arr = rd.array(root, section, "");
    if (!arr) return out;
    for (std::size_t i = 0; i < arr->size(); ++i) {
        const Json& e = (*arr)[i];
        const std::string w = fmt::format("{}[{}]", section, i);
        if (!rd.object(e, w)) continue;
        out.push_back({rd.string(e, "name", w), rd.number(e, "compute", w), rd.number(e, "memory", w),
                       rd.number(e, "storage", w)});
    }
    return out;
}

WorkloadSpec read_workload(Reader& rd, const Json& e, const std::string& w) {
    WorkloadSpec spec;
    const std::string kind = rd.string(e, "kind", w);
    if (kind == "explicit") {
        ExplicitWorkload ex;
        if (const Json* entries = rd.array(e, "entries", w + ".")) {
            for (std::size_t j = 0; j < entries->size(); ++j) {
                const Json& en = (*entries)[j];
                const std::string ew = fmt::format("{}.entries[{}]", w, j);
                if (!rd.object(en, ew)) continue;
                ex.entries.push_back({rd.string(en, "service", ew), rd.number(en, "arrival", ew),
                                      rd.number(en, "duration", ew)});
            }
        } else {
            rd.error(w, "explicit workload needs an 'entries' array");
        }
        spec.kind = std::move(ex);
    } else if (kind == "poisson") {
        spec.kind = PoissonWorkload{rd.string(e, "service", w), rd.number(e, "rate", w),
                                    rd.number(e, "mean_duration", w), rd.number(e, "horizon", w)};
    } else if (!kind.empty()) {
        rd.error(w + ".kind", "unknown workload kind '" + kind + "' (expected explicit or poisson)");
    }
    return spec;
}

template <class Decl>
std::map<std::string, std::size_t> index_names(const std::vector<Decl>& decls, const std::string& section,
                                               std::vector<Diagnostic>& diags) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < decls.size(); ++i) {
        const std::string w = fmt::format("{}[{}]", section, i);
        if (decls[i].name.empty()) {
            diags.push_back({Severity::Error, w + ".name", "name must not be empty"});
            continue;
        }
        if (!idx.emplace(decls[i].name, i).second) {
            diags.push_back({Severity::Error, w + ".name", "duplicate name '" + decls[i].name + "'"});
        }
    }
    return idx;
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0; }

}  // namespace

std::vector<Diagnostic> check_scenario(const Scenario& s) {
    std::vector<Diagnostic> d;
    const auto err = [&](std::string where, std::string msg) {
        d.push_back({Severity::Error, std::move(where), std::move(msg)});
    };

    index_names(s.clouds, "clouds", d);
    const auto nf_idx = index_names(s.nfs, "nfs", d);
    const auto slice_idx = index_names(s.slices, "slices", d);
    const auto service_idx = index_names(s.services, "services", d);

    for (std::size_t i = 0; i < s.clouds.size(); ++i) {
        const auto& c = s.clouds[i];
        for (double v : {c.compute, c.memory, c.storage}) {
            if (!(std::isfinite(v) && v > 0)) {
                err(fmt::format("clouds[{}]", i), "capacity must be finite and > 0 in every dimension");
                break;
            }
        }
    }

    if (s.policy.empty()) {
        err("policy", "a scheduler policy is required");
    } else if (PolicyCatalog catalog; !catalog.contains(s.policy)) {
        err("policy", fmt::format("unknown scheduler policy '{}' (known: {})", s.policy,
                                  fmt::join(catalog.names(), ", ")));
    }

    for (std::size_t i = 0; i < s.nfs.size(); ++i) {
        const auto& n = s.nfs[i];
        const std::string w = fmt::format("nfs[{}]", i);
        if (!finite_nonneg(n.compute) || !finite_nonneg(n.memory) || !finite_nonneg(n.storage)) {
            err(w, "requirement must be finite and >= 0 in every dimension");
            continue;
        }
        bool fits_somewhere = false;
        for (const auto& c : s.clouds) {
            if (n.compute <= c.compute && n.memory <= c.memory && n.storage <= c.storage) fits_somewhere = true;
        }
        if (!fits_somewhere) {
            d.push_back({Severity::Warning, w,
                         "NF '" + n.name + "' requirement exceeds the capacity of every declared cloud"});
        }
    }

    std::map<std::string, double> claimed;  // NF name -> sum of declared slice shares
    for (std::size_t i = 0; i < s.slices.size(); ++i) {
        const auto& sl = s.slices[i];
        const std::string w = fmt::format("slices[{}]", i);
        if (sl.composition.empty()) err(w + ".composition", "slice '" + sl.name + "' has an empty composition");
        std::set<std::string> seen;
        for (const auto& [nf, pct] : sl.composition) {
            const std::string here = w + ".composition[" + nf + "]";
            if (!seen.insert(nf).second) err(here, "NF listed twice");
            if (!nf_idx.count(nf)) err(here, "reference to unknown NF '" + nf + "'");
            if (!valid_share(pct)) {
                err(here, fmt::format("share {} is outside (0, 100]", pct));
            } else {
                claimed[nf] += pct;
            }
        }
    }
    for (const auto& [nf, total] : claimed) {
        if (nf_idx.count(nf) && total > 100.0 + kShareEpsilon) {
            err(fmt::format("nfs[{}]", nf_idx.at(nf)),
                fmt::format("slices claim {} % of NF '{}' in total, exceeding 100", total, nf));
        }
    }

    for (std::size_t i = 0; i < s.services.size(); ++i) {
        const auto& sv = s.services[i];
        const std::string w = fmt::format("services[{}]", i);
        if (sv.priority < 0) err(w + ".priority", "priority must be >= 0");
        if (sv.composition.empty()) err(w + ".composition", "service '" + sv.name + "' has an empty composition");
        std::set<std::string> seen;
        for (const auto& [slice, pct] : sv.composition) {
            const std::string here = w + ".composition[" + slice + "]";
            if (!seen.insert(slice).second) err(here, "slice listed twice");
            if (!slice_idx.count(slice)) err(here, "reference to unknown slice '" + slice + "'");
            if (!valid_share(pct)) err(here, fmt::format("share {} is outside (0, 100]", pct));
        }
    }

    for (std::size_t i = 0; i < s.workloads.size(); ++i) {
        const std::string w = fmt::format("workloads[{}]", i);
        const auto& spec = s.workloads[i];
        try {
            validate_workload(spec);
        } catch (const ValidationError& e) {
            err(w, e.what());
        }
        const auto check_service = [&](const std::string& name, const std::string& where) {
            if (!service_idx.count(name)) err(where, "reference to unknown service '" + name + "'");
        };
        if (const auto* ex = std::get_if<ExplicitWorkload>(&spec.kind)) {
            for (std::size_t j = 0; j < ex->entries.size(); ++j) {
                check_service(ex->entries[j].service, fmt::format("{}.entries[{}].service", w, j));
            }
        } else if (const auto* po = std::get_if<PoissonWorkload>(&spec.kind)) {
            check_service(po->service, w + ".service");
        }
    }

    if (!finite_nonneg(s.run.until)) err("run.until", "must be finite and >= 0");
    if (s.output.directory.empty()) err("output.directory", "must not be empty");
    return d;
}

LoadedScenario parse_scenario(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ScenarioParseError(std::string("scenario is not valid JSON: ") + e.what());
    }

    LoadedScenario out;
    out.scenario.source_hash = fnv1a_hex(text);
    Reader rd(out.diagnostics);
    if (!rd.object(root, "<root>")) return out;
    Scenario& s = out.scenario;

    s.clouds = read_resources(rd, root, "clouds");
    s.nfs = read_resources(rd, root, "nfs");

    if (const Json* p = rd.field(root, "policy", "<root>", false)) {
        if (p->is_string()) {
            s.policy = p->get<std::string>();
        } else if (p->is_object()) {
            s.policy = rd.string(*p, "name", "policy");
        } else {
            rd.error("policy", "expected a policy name or {\"name\": ...}");
        }
    }

    if (const Json* arr = rd.array(root, "slices", "")) {
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const Json& e = (*arr)[i];
            const std::string w = fmt::format("slices[{}]", i);
            if (!rd.object(e, w)) continue;
            s.slices.push_back({rd.string(e, "name", w), rd.composition(e, "composition", "nf", w)});
        }
    }

    if (const Json* arr = rd.array(root, "services", "")) {
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const Json& e = (*arr)[i];
            const std::string w = fmt::format("services[{}]", i);
            if (!rd.object(e, w)) continue;
            ServiceDecl decl;
            decl.name = rd.string(e, "name", w);
            if (const Json* pr = rd.field(e, "priority", w, false)) {
                if (pr->is_number_integer()) {
                    decl.priority = pr->get<int>();
                } else {
                    rd.error(w + ".priority", "expected an integer");
                }
            }
            decl.composition = rd.composition(e, "composition", "slice", w);
            s.services.push_back(std::move(decl));
        }
    }

    if (const Json* arr = rd.array(root, "workloads", "")) {
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const Json& e = (*arr)[i];
            const std::string w = fmt::format("workloads[{}]", i);
            if (!rd.object(e, w)) continue;
            s.workloads.push_back(read_workload(rd, e, w));
        }
    }

    if (const Json* run = rd.field(root, "run", "<root>", false); run && rd.object(*run, "run")) {
        s.run.until = rd.number(*run, "until", "run", false, 0);
        if (const Json* seed = rd.field(*run, "seed", "run", false)) {
            if (seed->is_number_unsigned()) {
                s.run.seed = seed->get<std::uint64_t>();
            } else {
                rd.error("run.seed", "expected a non-negative integer");
            }
        }
    }

    if (const Json* o = rd.field(root, "output", "<root>", false); o && rd.object(*o, "output")) {
        s.output.directory = rd.string(*o, "directory", "output", false, s.output.directory);
        if (const Json* fm = rd.field(*o, "formats", "output", false)) {
            if (!fm->is_array()) {
                rd.error("output.formats", "expected an array");
            } else {
                s.output.summary = s.output.trace = s.output.charts = false;
                for (const auto& f : *fm) {
                    const std::string name = f.is_string() ? f.get<std::string>() : std::string{};
                    if (name == "summary") {
                        s.output.summary = true;
                    } else if (name == "trace") {
                        s.output.trace = true;
                    } else if (name == "charts") {
                        s.output.charts = true;
                    } else {
                        rd.error("output.formats", "unknown format '" + name + "' (expected summary, trace, charts)");
                    }
                }
            }
        }
        const std::string dim = rd.string(*o, "layered_dimension", "output", false, "compute");
        try {
            s.output.layered_dimension = parse_dimension(dim);
        } catch (const ValidationError& e) {
            rd.error("output.layered_dimension", e.what());
        }
    }

    auto more = check_scenario(s);
    out.diagnostics.insert(out.diagnostics.end(), more.begin(), more.end());
    return out;
}

LoadedScenario load_scenario_file(const std::filesystem::path& path) {
    return parse_scenario(read_text_file(path));
}

std::vector<Diagnostic> validate(const std::filesystem::path& path) {
    return load_scenario_file(path).diagnostics;
}

}  // namespace slicenet
