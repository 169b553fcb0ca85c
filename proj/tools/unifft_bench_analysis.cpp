// unifft-bench-analysis: merges bench reports from a directory, recomputes
// speedup tables and writes json/csv/svg reports.
//
// Exit status: 0 success, 2 invalid parameters, 1 runtime failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

#include "unifft/errors.hpp"
#include "unifft/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Recompute speedup reports from unifft-bench json output"};
  std::string in_dir;
  std::string out_dir;
  std::string formats_text = "json,csv,svg";
  app.add_option("--in", in_dir, "Directory with unifft-bench json reports")->required();
  app.add_option("--out", out_dir, "Output directory (default: --in)");
  app.add_option("--formats", formats_text, "Comma-separated subset of json,csv,svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (out_dir.empty()) out_dir = in_dir;

  std::set<unifft::ReportFormat> formats;
  try {
    formats = unifft::parse_formats(formats_text);
    if (!std::filesystem::is_directory(in_dir)) {
      throw unifft::BadParameters("--in '" + in_dir + "' is not a directory");
    }
  } catch (const unifft::BadParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto records = unifft::load_records(in_dir);
    if (records.empty()) throw unifft::EmptyInput("no bench records found in '" + in_dir + "'");
    for (const auto& group : unifft::group_records(records)) {
      const auto table = unifft::compute_speedup(group);
      for (const auto& path : unifft::emit_report(table, group, out_dir, formats)) {
        std::cout << path.string() << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
