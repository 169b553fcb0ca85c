#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "unifft/bench.hpp"
#include "unifft/errors.hpp"

namespace unifft {

SpeedupTable compute_speedup(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw EmptyInput("compute_speedup: no records");
  const BenchRecord& first = records.front();
  for (const auto& r : records) {
    if (r.dims != first.dims || r.direction != first.direction || r.variant != first.variant) {
      throw BadParameters("compute_speedup: records mix dims, direction or variant");
    }
  }

  // Pool measurements per (backend, kind, n_p).
  std::map<std::tuple<std::string, std::string, int>, BenchRecord> pooled;
  for (const auto& r : records) {
    auto [it, inserted] = pooled.try_emplace({r.backend_id, r.kind, r.n_p}, r);
    if (!inserted) {
      auto& times = it->second.elapsed_seconds;
      times.insert(times.end(), r.elapsed_seconds.begin(), r.elapsed_seconds.end());
    }
  }

  SpeedupTable table{first.dims, first.direction, first.variant, 0, {}, {}, {}};
  table.n_p_min = std::min_element(records.begin(), records.end(), [](const auto& a, const auto& b) {
                    return a.n_p < b.n_p;
                  })->n_p;

  // std::map iterates in (backend, kind) order, so the first strict minimum
  // wins ties lexicographically.
  double fastest = 0.0;
  bool found = false;
  for (const auto& [key, rec] : pooled) {
    if (std::get<2>(key) != table.n_p_min) continue;
    const double t = median_time(rec);
    if (!found || t < fastest) {
      fastest = t;
      table.fastest_backend = std::get<0>(key);
      table.fastest_kind = std::get<1>(key);
      found = true;
    }
  }

  // Ordered so the fastest class gets exactly n_p_min.
  for (const auto& [key, rec] : pooled) {
    const double t = median_time(rec);
    const double s = (fastest / t) * static_cast<double>(table.n_p_min);
    table.entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), t, s});
  }
  return table;
}

}  // namespace unifft
