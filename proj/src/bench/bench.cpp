#include "unifft/bench.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "unifft/errors.hpp"
#include "unifft/redistribute.hpp"
#include "unifft/stats.hpp"

namespace unifft {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::core_into: return "core_into";
    case Variant::api_into: return "api_into";
    case Variant::api_alloc: return "api_alloc";
  }
  return "?";
}

std::string_view to_string(Transform t) { return t == Transform::fft ? "fft" : "ifft"; }

Variant parse_variant(std::string_view text) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == text) return v;
  }
  throw BadParameters("unknown variant '" + std::string(text) + "'");
}

Transform parse_transform(std::string_view text) {
  for (Transform t : kAllTransforms) {
    if (to_string(t) == text) return t;
  }
  throw BadParameters("unknown direction '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

// A measurement can never be shorter than one clock tick.
double elapsed_since(Clock::time_point start) {
  constexpr double tick = static_cast<double>(Clock::period::num) / Clock::period::den;
  const std::chrono::duration<double> dt = Clock::now() - start;
  return std::max(dt.count(), tick);
}

void check_options(const BenchOptions& o) {
  if (o.iterations < 1) throw BadParameters("iterations must be >= 1");
  if (o.repeats < 1) throw BadParameters("repeats must be >= 1");
}

template <typename T>
void require_identical(const std::vector<T>& a, const std::vector<T>& b, const std::vector<T>& c,
                       Transform direction) {
  if (a != b || a != c) {
    throw Error(std::string("variants disagree on ") + std::string(to_string(direction)) +
                " results; refusing to time them");
  }
}

// Runs the three call variants of one direction through a common driver.
template <typename Ops>
BenchRecord time_variants(Ops& ops, Transform direction, Variant variant, const BenchOptions& o,
                          BenchRecord record, const std::function<void()>& before,
                          const std::function<void()>& after) {
  if (direction == Transform::fft) {
    ops.core_fft();
    const auto a = ops.out_K.data;
    ops.api_fft_into();
    const auto b = ops.out_K.data;
    const auto c = ops.api_fft_alloc().data;
    require_identical(a, b, c, direction);
  } else {
    ops.core_ifft();
    const auto a = ops.out_X.data;
    ops.api_ifft_into();
    const auto b = ops.out_X.data;
    const auto c = ops.api_ifft_alloc().data;
    require_identical(a, b, c, direction);
  }

  volatile double sink = 0.0;
  auto call = [&] {
    switch (variant) {
      case Variant::core_into:
        direction == Transform::fft ? ops.core_fft() : ops.core_ifft();
        break;
      case Variant::api_into:
        direction == Transform::fft ? ops.api_fft_into() : ops.api_ifft_into();
        break;
      case Variant::api_alloc:
        if (direction == Transform::fft) {
          const auto r = ops.api_fft_alloc();
          if (!r.data.empty()) sink = sink + r.data.front().real();
        } else {
          const auto r = ops.api_ifft_alloc();
          if (!r.data.empty()) sink = sink + r.data.front();
        }
        break;
    }
  };

  call();  // warm-up
  for (int rep = 0; rep < o.repeats; ++rep) {
    before();
    const auto start = Clock::now();
    for (int it = 0; it < o.iterations; ++it) call();
    record.elapsed_seconds.push_back(elapsed_since(start));
    after();
  }
  return record;
}

struct SequentialOps {
  FftPlan& plan;
  RealField in_X;
  SpectralField in_K;
  RealField out_X;
  SpectralField out_K;

  void core_fft() { plan.forward(in_X.data, out_K.data); }
  void core_ifft() { plan.backward(in_K.data, out_X.data); }
  void api_fft_into() { fft_into(plan, in_X, out_K); }
  void api_ifft_into() { ifft_into(plan, in_K, out_X); }
  SpectralField api_fft_alloc() { return fft_alloc(plan, in_X); }
  RealField api_ifft_alloc() { return ifft_alloc(plan, in_K); }
};

struct DistributedOps {
  DistPlan& plan;
  RealField in_X;
  SpectralField in_K;
  RealField out_X;
  SpectralField out_K;

  void core_fft() { plan.forward(in_X.data, out_K.data); }
  void core_ifft() { plan.backward(in_K.data, out_X.data); }
  void api_fft_into() { dist_fft(plan, in_X, out_K); }
  void api_ifft_into() { dist_ifft(plan, in_K, out_X); }
  SpectralField api_fft_alloc() { return dist_fft_alloc(plan, in_X); }
  RealField api_ifft_alloc() { return dist_ifft_alloc(plan, in_K); }
};

}  // namespace

BenchRecord run_bench(FftPlan& plan, Transform direction, Variant variant, const BenchOptions& options) {
  check_options(options);
  RealField u = init_random(plan.grid(), options.seed);
  SpectralField u_fft = fft_alloc(plan, u);
  SequentialOps ops{plan, std::move(u), std::move(u_fft), make_real_field(plan.grid()),
                    make_spectral_field(plan.grid())};
  BenchRecord record{plan.backend_id(), variant, direction, plan.grid().dims(), "seq", 1,
                     options.iterations, {}};
  return time_variants(ops, direction, variant, options, std::move(record), [] {}, [] {});
}

BenchRecord run_bench(DistPlan& plan, Transform direction, Variant variant, const BenchOptions& options) {
  check_options(options);
  Communicator& comm = plan.context();
  const auto rank = static_cast<std::size_t>(comm.rank());

  // Every rank draws the same global field and keeps its own block.
  const RealField global = init_random(plan.grid(), options.seed);
  RealField local = make_local_real_field(plan);
  const Box whole{Shape(plan.grid().ndim(), 0), plan.grid().dims()};
  const Box& mine = plan.layouts().physical.boxes[rank];
  detail::for_each_run(mine, whole, mine, [&](std::size_t s, std::size_t d, std::size_t n) {
    std::copy_n(global.data.begin() + static_cast<std::ptrdiff_t>(s), n,
                local.data.begin() + static_cast<std::ptrdiff_t>(d));
  });
  SpectralField local_fft = dist_fft_alloc(plan, local);

  DistributedOps ops{plan, std::move(local), std::move(local_fft), make_local_real_field(plan),
                     make_local_spectral_field(plan)};
  BenchRecord record{plan.backend_id(), variant, direction, plan.grid().dims(),
                     std::string(to_string(plan.decomposition().kind)), comm.size(), options.iterations, {}};
  record = time_variants(ops, direction, variant, options, std::move(record), [&] { comm.barrier(); },
                         [&] { comm.barrier(); });

  const auto per_rank = gather(comm, std::span<const double>(record.elapsed_seconds));
  if (comm.rank() == 0) {
    for (const auto& times : per_rank) {
      for (std::size_t i = 0; i < times.size(); ++i) {
        record.elapsed_seconds[i] = std::max(record.elapsed_seconds[i], times[i]);
      }
    }
  }
  return record;
}

double median_time(const BenchRecord& record) {
  if (record.elapsed_seconds.empty()) throw EmptyInput("median_time: record has no measurements");
  std::vector<double> v = record.elapsed_seconds;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace unifft
