#include <doctest.h>

#include "unifft/bench.hpp"
#include "unifft/errors.hpp"
#include "unifft/spmd.hpp"

using namespace unifft;

namespace {

BenchRecord rec(std::string backend, int n_p, double t, std::string kind = "slab") {
  return BenchRecord{std::move(backend), Variant::core_into, Transform::fft, {8, 8, 8}, std::move(kind), n_p, 20, {t}};
}

const SpeedupEntry& entry(const SpeedupTable& t, const std::string& backend, int n_p) {
  for (const auto& e : t.entries)
    if (e.backend_id == backend && e.n_p == n_p) return e;
  throw std::runtime_error("missing entry");
}

}  // namespace

TEST_CASE("median") {
  CHECK(median_time(BenchRecord{"x", Variant::api_into, Transform::ifft, {4, 4}, "seq", 1, 1, {3, 1, 2}}) == 2.0);
  CHECK(median_time(BenchRecord{"x", Variant::api_into, Transform::ifft, {4, 4}, "seq", 1, 1, {4, 1, 3, 2}}) == 2.5);
  CHECK_THROWS_AS(median_time(BenchRecord{"x", Variant::api_into, Transform::ifft, {4, 4}, "seq", 1, 1, {}}),
                  EmptyInput);
}

TEST_CASE("speedup examples") {
  const auto t = compute_speedup({rec("fast", 2, 10.0), rec("fast", 8, 4.0)});
  CHECK(t.n_p_min == 2);
  CHECK(t.fastest_backend == "fast");
  CHECK(entry(t, "fast", 8).speedup == doctest::Approx(5.0));
  CHECK(entry(t, "fast", 2).speedup == 2.0);

  const auto u = compute_speedup({rec("naive", 2, 12.0), rec("fast", 2, 10.0)});
  CHECK(u.fastest_backend == "fast");
  CHECK(entry(u, "fast", 2).speedup == 2.0);
  CHECK(entry(u, "naive", 2).speedup == doctest::Approx(10.0 * 2 / 12.0));
}

TEST_CASE("speedup tie breaking and pooling") {
  const auto t = compute_speedup({rec("zeta", 1, 3.0), rec("alpha", 1, 3.0), rec("alpha", 1, 5.0, "pencil")});
  CHECK(t.fastest_backend == "alpha");
  CHECK(t.fastest_kind == "slab");
  CHECK(entry(t, "zeta", 1).speedup == 1.0);

  auto a = rec("fast", 1, 1.0);
  a.elapsed_seconds = {1.0, 9.0};
  auto b = rec("fast", 1, 5.0);
  const auto p = compute_speedup({a, b});
  REQUIRE(p.entries.size() == 1);
  CHECK(p.entries[0].median_seconds == 5.0);
}

TEST_CASE("speedup errors") {
  CHECK_THROWS_AS(compute_speedup({}), EmptyInput);
  auto other = rec("fast", 2, 1.0);
  other.direction = Transform::ifft;
  CHECK_THROWS_AS(compute_speedup({rec("fast", 1, 1.0), other}), BadParameters);
  auto dims = rec("fast", 2, 1.0);
  dims.dims = {8, 8};
  CHECK_THROWS_AS(compute_speedup({rec("fast", 1, 1.0), dims}), BadParameters);
}

TEST_CASE("perfect scaling gives linear speedup") {
  for (int lo : {1, 2, 3}) {
    std::vector<BenchRecord> rs;
    for (int k = 0; k < 6; ++k) {
      const int n = lo << k;
      rs.push_back(rec("fast", n, 7.3 / n));
      rs.push_back(rec("naive", n, 2 * 7.3 / n));
    }
    const auto t = compute_speedup(rs);
    for (const auto& e : t.entries) {
      const double expect = e.backend_id == "fast" ? e.n_p : e.n_p / 2.0;
      CHECK(std::abs(e.speedup - expect) <= 1e-12 * expect);
    }
    CHECK(entry(t, "fast", lo).speedup == double(lo));
  }
}

TEST_CASE("sequential bench records") {
  auto plan = create_plan("naive", GridSpec::periodic({8, 8}));
  for (auto dir : kAllTransforms) {
    for (auto v : kAllVariants) {
      const auto r = run_bench(plan, dir, v, BenchOptions{1, 3, 0});
      CHECK(r.backend_id == "naive");
      CHECK(r.variant == v);
      CHECK(r.direction == dir);
      CHECK(r.kind == "seq");
      CHECK(r.n_p == 1);
      CHECK(r.iterations == 1);
      CHECK(r.dims == Shape{8, 8});
      REQUIRE(r.elapsed_seconds.size() == 3);
      for (double t : r.elapsed_seconds) CHECK(t > 0.0);
    }
  }
  CHECK_THROWS_AS(run_bench(plan, Transform::fft, Variant::api_into, BenchOptions{0, 3, 0}), BadParameters);
  CHECK_THROWS_AS(run_bench(plan, Transform::fft, Variant::api_into, BenchOptions{1, 0, 0}), BadParameters);
}

TEST_CASE("distributed bench keeps the slowest rank on root") {
  const auto g = GridSpec::periodic({8, 8, 8});
  const auto recs = run_spmd(4, [&](Communicator& c) {
    auto plan = create_dist_plan("fast", g, DecompKind::pencil, c);
    return run_bench(plan, Transform::ifft, Variant::api_alloc, BenchOptions{2, 4, 1});
  });
  CHECK(recs[0].kind == "pencil");
  CHECK(recs[0].n_p == 4);
  REQUIRE(recs[0].elapsed_seconds.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (const auto& r : recs) CHECK(recs[0].elapsed_seconds[i] >= r.elapsed_seconds[i]);
}

TEST_CASE("names") {
  CHECK(to_string(Variant::core_into) == "core_into");
  CHECK(parse_variant("api_alloc") == Variant::api_alloc);
  CHECK(parse_transform("ifft") == Transform::ifft);
  CHECK_THROWS_AS(parse_variant("fast"), BadParameters);
}
