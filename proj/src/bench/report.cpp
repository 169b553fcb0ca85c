#include "unifft/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "unifft/errors.hpp"

namespace unifft {

namespace fs = std::filesystem;
using nlohmann::json;

std::set<ReportFormat> parse_formats(std::string_view text) {
  std::set<ReportFormat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (item == "json") {
      out.insert(ReportFormat::json);
    } else if (item == "csv") {
      out.insert(ReportFormat::csv);
    } else if (item == "svg") {
      out.insert(ReportFormat::svg);
    } else {
      throw BadParameters("unknown report format '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

json to_json(const BenchRecord& r) {
  return json{{"backend", r.backend_id},
              {"variant", std::string(to_string(r.variant))},
              {"direction", std::string(to_string(r.direction))},
              {"dims", r.dims},
              {"kind", r.kind},
              {"n_p", r.n_p},
              {"iterations", r.iterations},
              {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const SpeedupTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) {
    entries.push_back({{"backend", e.backend_id},
                       {"kind", e.kind},
                       {"n_p", e.n_p},
                       {"median_seconds", e.median_seconds},
                       {"speedup", e.speedup}});
  }
  return json{{"dims", t.dims},
              {"direction", std::string(to_string(t.direction))},
              {"variant", std::string(to_string(t.variant))},
              {"n_p_min", t.n_p_min},
              {"fastest_backend", t.fastest_backend},
              {"fastest_kind", t.fastest_kind},
              {"entries", std::move(entries)}};
}

BenchRecord record_from_json(const json& j) {
  BenchRecord r{j.at("backend").get<std::string>(),
                parse_variant(j.at("variant").get<std::string>()),
                parse_transform(j.at("direction").get<std::string>()),
                j.at("dims").get<Shape>(),
                j.at("kind").get<std::string>(),
                j.at("n_p").get<int>(),
                j.at("iterations").get<int>(),
                j.at("elapsed_seconds").get<std::vector<double>>()};
  if (r.iterations < 1 || r.elapsed_seconds.empty() ||
      std::any_of(r.elapsed_seconds.begin(), r.elapsed_seconds.end(), [](double t) { return !(t > 0.0); })) {
    throw Error("bench record for backend '" + r.backend_id + "' has invalid measurements");
  }
  return r;
}

SpeedupTable table_from_json(const json& j) {
  SpeedupTable t{j.at("dims").get<Shape>(),
                 parse_transform(j.at("direction").get<std::string>()),
                 parse_variant(j.at("variant").get<std::string>()),
                 j.at("n_p_min").get<int>(),
                 j.at("fastest_backend").get<std::string>(),
                 j.at("fastest_kind").get<std::string>(),
                 {}};
  for (const auto& e : j.at("entries")) {
    t.entries.push_back({e.at("backend").get<std::string>(), e.at("kind").get<std::string>(),
                         e.at("n_p").get<int>(), e.at("median_seconds").get<double>(),
                         e.at("speedup").get<double>()});
  }
  return t;
}

json report_document(const SpeedupTable& table, const std::vector<BenchRecord>& records) {
  json recs = json::array();
  for (const auto& r : records) recs.push_back(to_json(r));
  return json{{"schema", std::string(kReportSchema)},
              {"schema_version", kReportSchemaVersion},
              {"table", to_json(table)},
              {"records", std::move(recs)}};
}

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string dims_label(const Shape& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "x" : "") + std::to_string(dims[i]);
  return s;
}

std::string series_label(const SpeedupEntry& e) { return e.backend_id + " (" + e.kind + ")"; }

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string render_csv(const SpeedupTable& table) {
  std::ostringstream out;
  out << "backend,kind,variant,direction,n_p,median_s,speedup\n";
  for (const auto& e : table.entries) {
    out << e.backend_id << ',' << e.kind << ',' << to_string(table.variant) << ','
        << to_string(table.direction) << ',' << e.n_p << ',' << number(e.median_seconds) << ','
        << number(e.speedup) << '\n';
  }
  return out.str();
}

std::string render_svg(const SpeedupTable& table) {
  constexpr double width = 640, height = 480;
  constexpr double left = 70, right = 170, top = 40, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double np_lo = table.n_p_min, np_hi = table.n_p_min;
  double s_lo = table.n_p_min, s_hi = table.n_p_min;
  for (const auto& e : table.entries) {
    np_lo = std::min<double>(np_lo, e.n_p);
    np_hi = std::max<double>(np_hi, e.n_p);
    s_lo = std::min(s_lo, e.speedup);
    s_hi = std::max(s_hi, e.speedup);
  }
  s_lo = std::min(s_lo, np_lo);
  s_hi = std::max(s_hi, np_hi);
  // Half an octave of padding keeps single points inside the frame.
  const double lx0 = std::log2(np_lo) - 0.5, lx1 = std::log2(np_hi) + 0.5;
  const double ly0 = std::log2(s_lo) - 0.5, ly1 = std::log2(s_hi) + 0.5;
  auto px = [&](double np) { return left + (std::log2(np) - lx0) / (lx1 - lx0) * plot_w; };
  auto py = [&](double s) { return top + plot_h - (std::log2(s) - ly0) / (ly1 - ly0) * plot_h; };

  static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#e377c2", "#17becf"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<title>Speedup " << to_string(table.direction) << ' ' << to_string(table.variant) << ' '
      << dims_label(table.dims) << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  svg << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
      << to_string(table.direction) << ' ' << dims_label(table.dims) << " (" << to_string(table.variant)
      << ")</text>\n";
  svg << "<rect class=\"frame\" x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks at powers of two.
  for (int e = static_cast<int>(std::ceil(lx0)); e <= static_cast<int>(std::floor(lx1)); ++e) {
    const double v = std::exp2(e);
    svg << "<text x=\"" << fixed(px(v)) << "\" y=\"" << fixed(top + plot_h + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << number(v) << "</text>\n";
  }
  for (int e = static_cast<int>(std::ceil(ly0)); e <= static_cast<int>(std::floor(ly1)); ++e) {
    const double v = std::exp2(e);
    svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(py(v) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << number(v) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(height - 16)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">number of processes</text>\n";
  svg << "<text x=\"16\" y=\"" << fixed(top + plot_h / 2) << "\" font-family=\"sans-serif\" font-size=\"12\" "
      << "text-anchor=\"middle\" transform=\"rotate(-90 16 " << fixed(top + plot_h / 2) << ")\">speedup</text>\n";

  svg << "<polyline class=\"ideal\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6 4\" points=\""
      << fixed(px(np_lo)) << ',' << fixed(py(np_lo)) << ' ' << fixed(px(np_hi)) << ',' << fixed(py(np_hi))
      << "\"/>\n";

  std::map<std::pair<std::string, std::string>, std::vector<const SpeedupEntry*>> series;
  for (const auto& e : table.entries) series[{e.backend_id, e.kind}].push_back(&e);
  std::size_t index = 0;
  for (const auto& [key, points] : series) {
    const char* color = palette[index % std::size(palette)];
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->n_p < b->n_p; });
    svg << "<polyline class=\"series\" data-backend=\"" << key.first << "\" data-kind=\"" << key.second
        << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      svg << (i ? " " : "") << fixed(px(sorted[i]->n_p)) << ',' << fixed(py(sorted[i]->speedup));
    }
    svg << "\"/>\n";
    for (const auto* p : sorted) {
      svg << "<circle cx=\"" << fixed(px(p->n_p)) << "\" cy=\"" << fixed(py(p->speedup))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = top + 14 + 18 * static_cast<double>(index);
    svg << "<line x1=\"" << fixed(left + plot_w + 12) << "\" y1=\"" << fixed(ly) << "\" x2=\""
        << fixed(left + plot_w + 36) << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fixed(left + plot_w + 42) << "\" y=\"" << fixed(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << series_label(*points.front()) << "</text>\n";
    ++index;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string report_stem(const SpeedupTable& table) {
  return "speedup_" + dims_label(table.dims) + "_" + std::string(to_string(table.direction)) + "_" +
         std::string(to_string(table.variant));
}

std::vector<fs::path> emit_report(const SpeedupTable& table, const std::vector<BenchRecord>& records,
                                  const fs::path& out_dir, const std::set<ReportFormat>& formats) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create '" + out_dir.string() + "': " + ec.message());

  std::vector<fs::path> written;
  const std::string stem = report_stem(table);
  for (ReportFormat f : formats) {
    switch (f) {
      case ReportFormat::json: {
        const fs::path p = out_dir / (stem + ".json");
        write_file(p, report_document(table, records).dump(2) + "\n");
        written.push_back(p);
        break;
      }
      case ReportFormat::csv: {
        const fs::path p = out_dir / (stem + ".csv");
        write_file(p, render_csv(table));
        written.push_back(p);
        break;
      }
      case ReportFormat::svg: {
        const fs::path p = out_dir / (stem + ".svg");
        write_file(p, render_svg(table));
        written.push_back(p);
        break;
      }
    }
  }
  return written;
}

LoadedReport read_report(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("'" + path.string() + "' is not valid json: " + e.what());
  }
  if (doc.value("schema", "") != kReportSchema) {
    throw Error("'" + path.string() + "' is not a " + std::string(kReportSchema) + " document");
  }
  if (doc.value("schema_version", 0) != kReportSchemaVersion) {
    throw Error("'" + path.string() + "' has unsupported schema_version");
  }
  try {
    LoadedReport out{table_from_json(doc.at("table")), {}};
    for (const auto& r : doc.at("records")) out.records.push_back(record_from_json(r));
    return out;
  } catch (const json::exception& e) {
    throw Error("'" + path.string() + "': " + e.what());
  }
}

std::vector<BenchRecord> load_records(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchRecord> records;
  for (const auto& f : files) {
    for (auto& r : read_report(f).records) {
      if (std::find(records.begin(), records.end(), r) == records.end()) records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<std::vector<BenchRecord>> group_records(const std::vector<BenchRecord>& records) {
  std::map<std::tuple<Shape, std::string_view, std::string_view>, std::vector<BenchRecord>> groups;
  for (const auto& r : records) {
    groups[{r.dims, to_string(r.direction), to_string(r.variant)}].push_back(r);
  }
  std::vector<std::vector<BenchRecord>> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

}  // namespace unifft
