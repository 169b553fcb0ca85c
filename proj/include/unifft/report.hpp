#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unifft/bench.hpp"

namespace unifft {

enum class ReportFormat { json, csv, svg };

/// Parses "json,csv,svg"-style lists. Throws BadParameters.
std::set<ReportFormat> parse_formats(std::string_view text);

inline constexpr std::string_view kReportSchema = "unifft-bench-report";
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const BenchRecord& record);
nlohmann::json to_json(const SpeedupTable& table);
BenchRecord record_from_json(const nlohmann::json& j);
SpeedupTable table_from_json(const nlohmann::json& j);

/// Full report document: schema tag, version, table and its records.
nlohmann::json report_document(const SpeedupTable& table, const std::vector<BenchRecord>& records);

std::string render_csv(const SpeedupTable& table);
std::string render_svg(const SpeedupTable& table);

/// File stem shared by all formats, e.g. "speedup_16x16x16_fft_core_into".
std::string report_stem(const SpeedupTable& table);

/// Writes one file per requested format into out_dir (created if missing)
/// and returns their paths. IO failures throw Error naming the path.
std::vector<std::filesystem::path> emit_report(const SpeedupTable& table,
                                               const std::vector<BenchRecord>& records,
                                               const std::filesystem::path& out_dir,
                                               const std::set<ReportFormat>& formats);

struct LoadedReport {
  SpeedupTable table;
  std::vector<BenchRecord> records;
};
LoadedReport read_report(const std::filesystem::path& path);

/// Records from every report json in `dir`, duplicates removed.
std::vector<BenchRecord> load_records(const std::filesystem::path& dir);

/// Splits records into groups sharing (dims, direction, variant).
std::vector<std::vector<BenchRecord>> group_records(const std::vector<BenchRecord>& records);

}  // namespace unifft
