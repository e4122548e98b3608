#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "slicenet/io.hpp"
#include "slicenet/runner.hpp"

using namespace slicenet;

namespace {

const fs::path kScenarios = SLICENET_SCENARIO_DIR;
const fs::path kCli = SLICENET_CLI_PATH;

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("slicenet_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

fs::path write_scenario(const fs::path& dir, const Json& doc) {
    const fs::path p = dir / "scenario.json";
    write_text_file(p, doc.dump(2));
    return p;
}

int shell(const std::string& cmd) {
    const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("run the listing scenario") {
    const fs::path out = scratch("listing");
    std::ostringstream o, e;
    RunOverrides ov;
    ov.out_dir = out;
    REQUIRE(run_command(kScenarios / "listing1.json", ov, o, e) == kExitOk);

    const Json summary = read_json_file(out / "summary.json");
    std::vector<std::string> placements;
    std::vector<double> util;
    for (const auto& n : summary.at("nfs")) {
        placements.push_back(n.at("placement"));
        util.push_back(n.at("utilization"));
    }
    CHECK(placements == std::vector<std::string>{"c1", "c2", "c1", "c2"});
    CHECK(util == std::vector<double>{70, 54, 80, 32});
    CHECK(read_trace(out / "trace.jsonl").empty());
    CHECK(fs::exists(out / "charts" / "nf_0.json"));

    std::ostringstream ro, re;
    CHECK(report_command(out, ro, re) == kExitOk);
    CHECK(ro.str().find("Vedio Streaming Slice=20") != std::string::npos);
    CHECK(ro.str().find("0 trace record(s)") != std::string::npos);
}

TEST_CASE("identical runs produce identical bytes") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    std::ostringstream sink;
    RunOverrides ov;
    ov.out_dir = a;
    REQUIRE(run_command(kScenarios / "poisson_video.json", ov, sink, sink) == kExitOk);
    ov.out_dir = b;
    REQUIRE(run_command(kScenarios / "poisson_video.json", ov, sink, sink) == kExitOk);
    for (const auto* f : {"summary.json", "trace.jsonl", "charts/layered_0.json", "charts/nf_2.json"}) {
        CHECK(read_text_file(a / f) == read_text_file(b / f));
    }
    ov.seed = 43;
    const fs::path c = scratch("det_c");
    ov.out_dir = c;
    REQUIRE(run_command(kScenarios / "poisson_video.json", ov, sink, sink) == kExitOk);
    CHECK(read_text_file(a / "trace.jsonl") != read_text_file(c / "trace.jsonl"));
}

TEST_CASE("setup rejection names the NF") {
    const fs::path dir = scratch("reject");
    Json doc = read_json_file(kScenarios / "listing1.json");
    doc["nfs"].push_back({{"name", "giant NF"}, {"compute", 5000}, {"memory", 1}, {"storage", 1}});
    std::ostringstream o, e;
    RunOverrides ov;
    ov.out_dir = dir / "out";
    CHECK(run_command(write_scenario(dir, doc), ov, o, e) == kExitSetupRejected);
    CHECK(e.str().find("giant NF") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "out" / "summary.json"));
}

TEST_CASE("validation failures stop the run") {
    const fs::path dir = scratch("invalid");
    Json doc = read_json_file(kScenarios / "listing1.json");
    doc["slices"][0]["composition"]["NF 9"] = 5;
    const fs::path p = write_scenario(dir, doc);
    std::ostringstream o, e;
    RunOverrides ov;
    ov.out_dir = dir / "out";
    CHECK(validate_command(p, o, e) == kExitValidation);
    CHECK(run_command(p, ov, o, e) == kExitValidation);
    CHECK_FALSE(fs::exists(dir / "out"));

    ov.policy = "bogus";
    CHECK(run_command(kScenarios / "listing1.json", ov, o, e) == kExitValidation);
}

TEST_CASE("policy override changes placement") {
    const fs::path out = scratch("worst");
    std::ostringstream sink;
    RunOverrides ov;
    ov.out_dir = out;
    ov.policy = "worst-fit";
    REQUIRE(run_command(kScenarios / "listing1.json", ov, sink, sink) == kExitOk);
    const Json summary = read_json_file(out / "summary.json");
    CHECK(summary.at("metadata").at("policy") == "worst-fit");
    CHECK(summary.at("nfs")[0].at("placement") == "c2");
}

TEST_CASE("report errors") {
    std::ostringstream o, e;
    CHECK(report_command(scratch("empty-dir"), o, e) == kExitIo);
    const fs::path dir = scratch("corrupt");
    write_text_file(dir / "summary.json", "{}");
    write_text_file(dir / "trace.jsonl", "");
    CHECK(report_command(dir, o, e) == kExitIo);
}

TEST_CASE("batch mode runs scenarios independently") {
    const fs::path out = scratch("batch");
    std::ostringstream o, e;
    RunOverrides ov;
    ov.out_dir = out;
    const std::vector<fs::path> files{kScenarios / "listing1.json", kScenarios / "poisson_video.json"};
    CHECK(run_batch(files, ov, 2, o, e) == kExitOk);
    CHECK(fs::exists(out / "listing1" / "summary.json"));
    CHECK(fs::exists(out / "poisson_video" / "trace.jsonl"));
}

TEST_CASE("command-line exit codes") {
    const fs::path dir = scratch("exe");
    const std::string cli = quoted(kCli);
    CHECK(shell(cli + " validate " + quoted(kScenarios / "listing1.json")) == 0);
    CHECK(shell(cli + " run " + quoted(kScenarios / "listing1.json") + " --out " + quoted(dir / "run")) == 0);
    CHECK(shell(cli + " report " + quoted(dir / "run")) == 0);
    CHECK(shell(cli + " run " + quoted(kScenarios / "listing1.json") + " --seed 3 --policy random --out " +
                quoted(dir / "rand")) == 0);

    write_text_file(dir / "broken.json", "{");
    CHECK(shell(cli + " validate " + quoted(dir / "broken.json")) == 1);
    CHECK(shell(cli + " run " + quoted(kScenarios / "listing1.json") + " --policy nope") == 1);
    CHECK(shell(cli + " validate " + quoted(dir / "absent.json")) == 3);
    CHECK(shell(cli + " report " + quoted(dir / "absent")) == 3);

    Json doc = read_json_file(kScenarios / "listing1.json");
    doc["nfs"].push_back({{"name", "giant"}, {"compute", 1e6}, {"memory", 1}, {"storage", 1}});
    write_text_file(dir / "giant.json", doc.dump());
    CHECK(shell(cli + " run " + quoted(dir / "giant.json") + " --out " + quoted(dir / "giant")) == 2);

    // Output path under a regular file cannot be created.
    write_text_file(dir / "file", "x");
    CHECK(shell(cli + " run " + quoted(kScenarios / "listing1.json") + " --out " + quoted(dir / "file" / "sub")) == 3);
}
