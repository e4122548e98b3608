#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicenet/engine.hpp"
#include "slicenet/report.hpp"

namespace slicenet {

using Json = nlohmann::json;
namespace fs = std::filesystem;

/// 17 significant digits ("%.17g"). Integral values render without exponent
/// or fraction when they fit.
std::string format_number(double v);

/// Serializes `doc` with every floating-point number in format_number form.
/// indent < 0 produces a single line.
std::string dump_json(const Json& doc, int indent = -1);

Json to_json(const TraceRecord& r);
TraceRecord trace_record_from_json(const Json& j);

Json to_json(const MetricsSummary& s);
Json to_json(const ChartData& c);
Json to_json(const LayeredView& v);

/// One JSON object per line.
void write_trace(const fs::path& path, std::span<const TraceRecord> trace);
std::vector<TraceRecord> read_trace(const fs::path& path);

void write_summary(const fs::path& path, const MetricsSummary& summary);
Json read_json_file(const fs::path& path);

/// Writes nf_<id>.json per NF, cloud_utilization_<dim>.json per dimension and
/// layered_<cloud id>.json per cloud into `dir`. Returns the files written.
std::vector<fs::path> write_charts(const fs::path& dir, const RegistrySnapshot& snapshot,
                                   Dimension layered_dimension = Dimension::Compute);

std::string read_text_file(const fs::path& path);
void write_text_file(const fs::path& path, const std::string& content);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace slicenet
