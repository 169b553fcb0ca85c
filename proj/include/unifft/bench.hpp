#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "unifft/dist_plan.hpp"
#include "unifft/grid.hpp"
#include "unifft/plan.hpp"

namespace unifft {

/// How a transform is called while being timed.
///  - core_into: raw plan method on preallocated buffers, no checks.
///  - api_into: checked field API writing into a preallocated result.
///  - api_alloc: checked field API returning a freshly allocated result.
enum class Variant { core_into, api_into, api_alloc };
enum class Transform { fft, ifft };

std::string_view to_string(Variant v);
std::string_view to_string(Transform t);
/// Throw BadParameters on unknown names.
Variant parse_variant(std::string_view text);
Transform parse_transform(std::string_view text);

inline constexpr Variant kAllVariants[] = {Variant::core_into, Variant::api_into, Variant::api_alloc};
inline constexpr Transform kAllTransforms[] = {Transform::fft, Transform::ifft};

/// One timed measurement series. Each entry of elapsed_seconds is the wall
/// time of `iterations` consecutive calls; it is never divided by N.
struct BenchRecord {
  std::string backend_id;
  Variant variant;
  Transform direction;
  Shape dims;
  std::string kind;  // "seq", "slab" or "pencil"
  int n_p;
  int iterations;
  std::vector<double> elapsed_seconds;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchOptions {
  int iterations = 20;
  int repeats = 5;
  std::uint64_t seed = 0;
};

/**
 * Times `options.repeats` measurements of `options.iterations` calls each,
 * after one untimed warm-up call. Before timing, all three variants are run
 * on the same input and must agree bitwise, otherwise Error is thrown.
 */
BenchRecord run_bench(FftPlan& plan, Transform direction, Variant variant, const BenchOptions& options);

/**
 * Collective version for distributed plans. Each measurement is bracketed
 * by barriers; rank 0 returns the maximum over ranks per measurement, other
 * ranks return their own times.
 */
BenchRecord run_bench(DistPlan& plan, Transform direction, Variant variant, const BenchOptions& options);

/// Median of elapsed_seconds; mean of the two central values for even counts.
double median_time(const BenchRecord& record);

struct SpeedupEntry {
  std::string backend_id;
  std::string kind;
  int n_p;
  double median_seconds;
  double speedup;

  friend bool operator==(const SpeedupEntry&, const SpeedupEntry&) = default;
};

/**
 * Strong-scaling speedup of every (backend, kind) class:
 *
 *   S(n_p) = T_fastest(n_p_min) * n_p_min / T(n_p)
 *
 * where T are median times for N iterations, n_p_min the smallest rank count
 * present and "fastest" the class with the smallest median at n_p_min (ties
 * go to the lexicographically smallest backend id, then kind).
 */
struct SpeedupTable {
  Shape dims;
  Transform direction;
  Variant variant;
  int n_p_min;
  std::string fastest_backend;
  std::string fastest_kind;
  std::vector<SpeedupEntry> entries;  // sorted by backend, kind, n_p

  friend bool operator==(const SpeedupTable&, const SpeedupTable&) = default;
};

/// Records must share dims, direction and variant. Records of the same
/// (backend, kind, n_p) are pooled. Throws EmptyInput for an empty list and
/// BadParameters for mixed groups.
SpeedupTable compute_speedup(const std::vector<BenchRecord>& records);

}  // namespace unifft
