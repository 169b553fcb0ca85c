#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "unifft/decomposition.hpp"
#include "unifft/dist_plan.hpp"
#include "unifft/errors.hpp"
#include "unifft/redistribute.hpp"
#include "unifft/spmd.hpp"
#include "unifft/stats.hpp"

using namespace unifft;

namespace {

// Values of a row-major global array restricted to one box.
template <typename T>
std::vector<T> extract(const std::vector<T>& global, const Shape& gshape, const Box& box) {
  std::vector<T> out;
  out.reserve(box.count());
  if (box.count() == 0) return out;
  Shape idx(gshape.size(), 0);
  for (std::size_t n = 0; n < box.count(); ++n) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < gshape.size(); ++a) flat = flat * gshape[a] + box.offset[a] + idx[a];
    out.push_back(global[flat]);
    for (std::size_t a = idx.size(); a-- > 0;) {
      if (++idx[a] < box.extent[a]) break;
      idx[a] = 0;
    }
  }
  return out;
}

std::vector<Complex> ramp(std::size_t n) {
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(double(i), -double(i) * 0.5);
  return v;
}

}  // namespace

TEST_CASE("transpose with one rank is the identity") {
  const Shape g{4, 6};
  const auto from = split_layout(g, {{0, 1}});
  const auto to = split_layout(g, {{1, 1}});
  const auto data = ramp(24);
  const auto out = run_spmd(1, [&](Communicator& c) { return transpose_exchange(c, data, from, to); });
  CHECK(out[0] == data);
}

TEST_CASE("row split to column split") {
  for (int size : {2, 3, 4}) {
    const Shape g{4, 6, 5};
    const auto global = ramp(element_count(g));
    const auto from = split_layout(g, {{0, std::size_t(size)}});
    const auto to = split_layout(g, {{1, std::size_t(size)}});
    const auto out = run_spmd(size, [&](Communicator& c) {
      const auto mine = extract(global, g, from.boxes[std::size_t(c.rank())]);
      return transpose_exchange(c, mine, from, to);
    });
    for (int r = 0; r < size; ++r) CHECK(out[std::size_t(r)] == extract(global, g, to.boxes[std::size_t(r)]));
  }
}

TEST_CASE("transpose involution") {
  for (int size : {1, 2, 3, 4, 6, 8}) {
    const Shape g{6, 8, 5};
    const auto l = make_layouts(DecompKind::slab, g, std::size_t(size));
    const auto global = ramp(element_count(l.physical_complex.global));
    const auto ok = run_spmd(size, [&](Communicator& c) {
      const auto mine = extract(global, l.physical_complex.global, l.physical_complex.boxes[std::size_t(c.rank())]);
      const auto there = transpose_exchange(c, mine, l.physical_complex, l.spectral);
      return transpose_exchange(c, there, l.spectral, l.physical_complex) == mine;
    });
    for (bool b : ok) CHECK(b);
  }
}

TEST_CASE("pencil transposes round trip") {
  const Shape g{6, 8, 5};
  const auto l = make_layouts(DecompKind::pencil, {6, 8, 8}, 6);
  const auto global = ramp(element_count(g));
  const auto ok = run_spmd(6, [&](Communicator& c) {
    const auto r = std::size_t(c.rank());
    const auto mine = extract(global, g, l.physical_complex.boxes[r]);
    const auto b = transpose_exchange(c, mine, l.physical_complex, l.intermediate);
    const auto s = transpose_exchange(c, b, l.intermediate, l.spectral);
    const bool at_s = s == extract(global, g, l.spectral.boxes[r]);
    const auto b2 = transpose_exchange(c, s, l.spectral, l.intermediate);
    const auto a2 = transpose_exchange(c, b2, l.intermediate, l.physical_complex);
    return at_s && a2 == mine;
  });
  for (bool b : ok) CHECK(b);
}

TEST_CASE("local buffer mismatch") {
  const Shape g{4, 4};
  const auto from = split_layout(g, {{0, 2}});
  const auto to = split_layout(g, {{1, 2}});
  CHECK_THROWS_AS(run_ranks(2,
                            [&](Communicator& c) {
                              std::vector<Complex> wrong(3);
                              transpose_exchange(c, wrong, from, to);
                            }),
                  RankFailure);
  try {
    run_ranks(1, [&](Communicator& c) {
      std::vector<Complex> wrong(3);
      transpose_exchange(c, wrong, from, to);
    });
  } catch (const RankFailure& e) {
    CHECK_THROWS_AS(std::rethrow_exception(e.cause()), LayoutMismatch);
  }
}

TEST_CASE("gather and scatter") {
  const auto grid = GridSpec::periodic({5, 4});
  const auto u = init_random(grid, 4);
  const auto round = run_spmd(1, [&](Communicator& c) {
    const auto info = make_decomposition(DecompKind::slab, grid, c);
    return *gather_X(c, info, scatter_X(c, info, grid, u));
  });
  CHECK(round[0].data == u.data);

  auto r = make_real_field(GridSpec::periodic({4, 4}));
  std::iota(r.data.begin(), r.data.end(), 0.0);
  const auto blocks = run_spmd(2, [&](Communicator& c) {
    const auto info = make_decomposition(DecompKind::slab, r.grid, c);
    std::optional<RealField> g;
    if (c.rank() == 0) g = r;
    return scatter_X(c, info, r.grid, g).data;
  });
  CHECK(blocks[0] == std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(blocks[1] == std::vector<double>{8, 9, 10, 11, 12, 13, 14, 15});

  for (int size : {1, 2, 3, 4, 6, 8, 10}) {
    for (auto kind : {DecompKind::slab, DecompKind::pencil}) {
      const auto g = GridSpec::periodic({8, 6, 7});
      if (are_parameters_bad(kind, g.dims(), std::size_t(size))) continue;
      const auto v = init_random(g, 12);
      const auto res = run_spmd(size, [&](Communicator& c) {
        const auto info = make_decomposition(kind, g, c);
        std::optional<RealField> in;
        if (c.rank() == 0) in = v;
        const auto local = scatter_X(c, info, g, in);
        const bool shape_ok = local.shape == info.shapeX_loc;
        auto back = gather_X(c, info, local);
        return std::make_pair(shape_ok, back ? back->data : std::vector<double>{});
      });
      CHECK(res[0].second == v.data);
      for (const auto& [ok, rest] : res) CHECK(ok);
      for (std::size_t i = 1; i < res.size(); ++i) CHECK(res[i].second.empty());
    }
  }
}
