// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "unifft/bench.hpp"
#include "unifft/decomposition.hpp"
#include "unifft/dist_plan.hpp"
#include "unifft/operators.hpp"
#include "unifft/oracle.hpp"
#include "unifft/plan.hpp"
#include "unifft/report.hpp"
#include "unifft/spmd.hpp"
#include "unifft/stats.hpp"

using namespace unifft;
using unifft::testing::max_abs_diff;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.detail << "; " << secs << " s)" << std::endl;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::size_t> ext = {2, 3, 4, 5, 6, 8, 9, 12, 16};
  double worst = 0.0;
  std::size_t cases = 0;
  auto check = [&](const Shape& d) {
    const auto g = GridSpec::periodic(d);
    const auto u = init_random(g, ++cases);
    auto p = create_plan("fast", g);
    worst = std::max(worst, max_abs_diff(fft_alloc(p, u).data, naive_dft_r2c(g, u).data));
  };
  for (auto a : ext)
    for (auto b : ext) {
      check({a, b});
      for (auto c : ext) check({a, b, c});
    }
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && secs < 60.0,
          std::to_string(cases) + " grids, max err " + fmt(worst) + ", runtime " + fmt(secs) + " s < 60 s"};
}

Outcome roundtrip() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t ndim : {2UL, 3UL}) {
    for (int c = 0; c < 100; ++c) {
      const auto g = unifft::testing::random_grid(rng, ndim, 32);
      const auto u = init_random(g, rng());
      for (const auto& id : available_backends()) {
        auto p = create_plan(id, g);
        worst = std::max(worst, max_abs_diff(ifft_alloc(p, fft_alloc(p, u)).data, u.data));
        ++cases;
      }
    }
  }
  return {worst <= 1e-10, std::to_string(cases) + " transforms over all backends, max err " + fmt(worst)};
}

Outcome sine_gradient() {
  const auto g = GridSpec({100, 100}, {2 * std::numbers::pi, 2 * std::numbers::pi});
  auto p = create_plan("fast", g);
  const auto og = build_operator_grid(p);
  const auto u = unifft::testing::sample(g, [](double x, double y, double) { return std::sin(x + y); });
  const auto c = unifft::testing::sample(g, [](double x, double y, double) { return std::cos(x + y); });
  auto uk = make_spectral_field(g);
  fft_into(p, u, uk);
  const auto grad = gradfft_from_fft(og, uk);
  auto px = make_real_field(g), py = make_real_field(g);
  ifft_into(p, grad[0], px);
  ifft_into(p, grad[1], py);
  const double ex = max_abs_diff(px.data, c.data), ey = max_abs_diff(py.data, c.data);
  return {ex <= 1e-10 && ey <= 1e-10, "d/dx err " + fmt(ex) + ", d/dy err " + fmt(ey)};
}

Outcome mean_energy() {
  double mean_err = 0.0, energy_err = 0.0;
  std::size_t cases = 0;
  for (const Shape& d : {Shape{16, 16}, Shape{31, 12}, Shape{8, 8, 8}, Shape{12, 10, 9}, Shape{32, 16, 6}}) {
    const auto g = GridSpec::periodic(d);
    for (const auto& id : available_backends()) {
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto u = init_random(g, seed);
        auto p = create_plan(id, g);
        const auto k = fft_alloc(p, u);
        const auto back = ifft_alloc(p, k);
        mean_err = std::max({mean_err, std::abs(compute_mean(u) - k.data[0].real()),
                             std::abs(compute_mean(u) - compute_mean(back))});
        energy_err = std::max({energy_err, std::abs(compute_energy_X(u) - compute_energy_K(k)),
                               std::abs(compute_energy_X(u) - compute_energy_X(back))});
        ++cases;
      }
    }
  }
  return {mean_err <= 1e-12 && energy_err <= 1e-10,
          std::to_string(cases) + " fields, mean err " + fmt(mean_err) + ", energy err " + fmt(energy_err)};
}

Outcome distributed() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  std::size_t runs = 0;
  auto run = [&](const Shape& d, DecompKind kind, int size) {
    const auto g = GridSpec::periodic(d);
    const auto u = init_random(g, 7);
    auto seq = create_plan("fast", g);
    const auto ref = fft_alloc(seq, u);
    const auto errs = run_spmd(size, [&](Communicator& c) {
      auto plan = create_dist_plan("fast", g, kind, c);
      std::optional<RealField> in;
      if (c.rank() == 0) in = u;
      const auto k = dist_fft_alloc(plan, scatter_X(c, plan.decomposition(), g, in));
      const auto x = dist_ifft_alloc(plan, k);
      const auto gk = gather_K(c, plan.decomposition(), k);
      const auto gx = gather_X(c, plan.decomposition(), x);
      if (!gk) return 0.0;
      return std::max(max_abs_diff(gk->data, ref.data), max_abs_diff(gx->data, u.data));
    });
    worst = std::max(worst, errs[0]);
    ++runs;
  };
  for (const Shape& d : {Shape{8, 8, 8}, Shape{12, 8, 10}})
    for (int size : {1, 2, 3, 4, 6, 8})
      for (auto kind : {DecompKind::slab, DecompKind::pencil}) run(d, kind, size);
  run({8, 8, 8}, DecompKind::slab, 10);
  const double secs = seconds_since(t0);
  return {worst <= 1e-10 && secs < 120.0,
          std::to_string(runs) + " runs incl. empty blocks, max err " + fmt(worst) + ", runtime " + fmt(secs) +
              " s < 120 s"};
}

Outcome projection() {
  double div = 0.0, idem = 0.0;
  bool zero_ok = true, same = true;
  for (const Shape& d : {Shape{16, 12}, Shape{8, 10, 6}, Shape{9, 7, 12}}) {
    const auto g = GridSpec::periodic(d);
    auto p = create_plan("fast", g);
    const auto og = build_operator_grid(p);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SpectralVector v;
      for (std::size_t c = 0; c < g.ndim(); ++c) v.push_back(fft_alloc(p, init_random(g, 100 * seed + c)));
      const auto pv = proj_outplace(og, v);
      div = std::max(div, unifft::testing::max_abs(divfft_from_vecfft(og, pv).data));
      const auto ppv = proj_outplace(og, pv);
      auto w = v;
      proj_inplace(og, w);
      for (std::size_t c = 0; c < v.size(); ++c) {
        idem = std::max(idem, max_abs_diff(ppv[c].data, pv[c].data));
        zero_ok = zero_ok && pv[c].data[0] == v[c].data[0] && w[c].data[0] == v[c].data[0];
        same = same && w[c].data == pv[c].data;
      }
    }
  }
  return {div <= 1e-12 && idem <= 1e-14 && zero_ok && same,
          "divergence " + fmt(div) + ", idempotence " + fmt(idem) + ", zero mode " +
              (zero_ok ? "bitwise" : "changed") + ", outplace/inplace " + (same ? "identical" : "differ")};
}

Outcome speedup_identity() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> t(1e-4, 10.0);
  bool exact = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<BenchRecord> rs;
    const int lo = 1 + trial % 5;
    for (const char* b : {"fast", "naive", "fftw"})
      for (int n : {lo, 2 * lo, 4 * lo})
        rs.push_back({b, Variant::core_into, Transform::fft, {16, 16, 16}, "slab", n, 20, {t(rng), t(rng), t(rng)}});
    const auto table = compute_speedup(rs);
    for (const auto& e : table.entries)
      if (e.backend_id == table.fastest_backend && e.kind == table.fastest_kind && e.n_p == table.n_p_min)
        exact = exact && e.speedup == double(table.n_p_min);
  }
  double rel = 0.0;
  for (int lo : {1, 2, 3, 5}) {
    const double c = 3.7;
    std::vector<BenchRecord> rs;
    for (int k = 0; k < 7; ++k) rs.push_back({"fast", Variant::api_into, Transform::ifft, {8, 8}, "slab", lo << k, 20, {c / (lo << k)}});
    for (const auto& e : compute_speedup(rs).entries) rel = std::max(rel, std::abs(e.speedup - e.n_p) / e.n_p);
  }
  return {exact && rel <= 1e-12,
          std::string("S(n_p_min) ") + (exact ? "exact" : "inexact") + " over 200 tables, linear rel err " + fmt(rel)};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome bench_cli() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto root = fs::temp_directory_path() / "unifft_acceptance_cli";
  fs::remove_all(root);
  const auto raw = root / "raw", out = root / "analysis";
  const std::string bench = std::string(UNIFFT_BENCH_EXE) + " --dims 16x16x16 --kind slab --np 1 --np 2 --np 4 --out " +
                            raw.string() + " > " + (root / "bench.log").string() + " 2>&1";
  const std::string analysis = std::string(UNIFFT_ANALYSIS_EXE) + " --in " + raw.string() + " --out " + out.string() +
                               " --formats json,csv,svg > " + (root / "analysis.log").string() + " 2>&1";
  fs::create_directories(root);
  if (std::system(bench.c_str()) != 0) return {false, "unifft-bench failed, see " + (root / "bench.log").string()};
  if (std::system(analysis.c_str()) != 0) return {false, "unifft-bench-analysis failed"};

  std::size_t json = 0, csv = 0, svg = 0;
  std::string problem;
  for (const auto& entry : fs::directory_iterator(out)) {
    const auto ext = entry.path().extension();
    const std::string text = read_file(entry.path());
    if (ext == ".json") {
      ++json;
      const auto loaded = read_report(entry.path());
      if (table_from_json(to_json(loaded.table)) != loaded.table) problem = "table json round trip";
      for (const auto& r : loaded.records)
        if (record_from_json(to_json(r)) != r) problem = "record json round trip";
      if (compute_speedup(loaded.records) != loaded.table) problem = "table does not match its records";
      const auto doc = nlohmann::json::parse(text);
      if (nlohmann::json::parse(doc.dump()) != doc) problem = "document round trip";
      for (const auto& e : loaded.table.entries)
        if (e.backend_id == loaded.table.fastest_backend && e.kind == loaded.table.fastest_kind &&
            e.n_p == loaded.table.n_p_min && e.speedup != e.n_p)
          problem = "fastest class speedup";
    } else if (ext == ".csv") {
      ++csv;
      std::istringstream in(text);
      std::string line;
      std::getline(in, line);
      if (line != "backend,kind,variant,direction,n_p,median_s,speedup") problem = "csv header";
      std::size_t rows = 0;
      while (std::getline(in, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (cells.size() != 7 || std::stod(cells[5]) <= 0.0 || std::stod(cells[6]) <= 0.0) problem = "csv row " + line;
      }
      if (rows == 0) problem = "csv without rows";
    } else if (ext == ".svg") {
      ++svg;
      if (text.rfind("<svg", 0) != 0 || text.find("</svg>") == std::string::npos ||
          text.find("class=\"ideal\"") == std::string::npos || text.find("class=\"series\"") == std::string::npos)
        problem = "svg structure";
    }
  }
  // one table per (direction, variant): 2 x 3
  if (json != 6 || csv != 6 || svg != 6)
    problem = "expected 6 files of each format, got " + std::to_string(json) + "/" + std::to_string(csv) + "/" +
              std::to_string(svg);
  const double secs = seconds_since(t0);
  fs::remove_all(root);
  return {problem.empty() && secs < 60.0,
          (problem.empty() ? std::string("json/csv/svg valid") : problem) + ", runtime " + fmt(secs) + " s < 60 s"};
}

// p0 = largest a with a * b == size and a <= b, by exhaustive search
bool pencil_bad_brute_force(const Shape& d, std::size_t size) {
  std::size_t p0 = 0, p1 = 0;
  for (std::size_t a = 1; a <= size; ++a)
    for (std::size_t b = a; b <= size; ++b)
      if (a * b == size) {
        p0 = a;
        p1 = b;
      }
  return p0 > d[0] || p1 > d[1];
}

Outcome parameters_truth_table() {
  bool ok = !are_parameters_bad(DecompKind::slab, {32, 32, 32}, 4) &&
            !are_parameters_bad(DecompKind::slab, {32, 32, 32}, 40) &&
            are_parameters_bad(DecompKind::pencil, {8, 8, 8}, 65);
  std::size_t bad = 0;
  for (std::size_t s = 1; s <= 70; ++s) {
    ok = ok && !are_parameters_bad(DecompKind::slab, {8, 8, 8}, s);
    const bool expect = pencil_bad_brute_force({8, 8, 8}, s);
    ok = ok && are_parameters_bad(DecompKind::pencil, {8, 8, 8}, s) == expect;
    bad += expect;
  }
  return {ok, "examples and sizes 1..70 agree, " + std::to_string(bad) + " pencil sizes rejected"};
}

}  // namespace

int main() {
  std::cout.precision(3);
  criterion("oracle equivalence", oracle_equivalence);
  criterion("roundtrip", roundtrip);
  criterion("sine gradient on 100x100", sine_gradient);
  criterion("mean and energy preserved", mean_energy);
  criterion("distributed equivalence", distributed);
  criterion("projection properties", projection);
  criterion("speedup formula identity", speedup_identity);
  criterion("bench cli end to end", bench_cli);
  criterion("are_parameters_bad truth table", parameters_truth_table);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
