#include "unifft/redistribute.hpp"

#include <algorithm>

namespace unifft {

BlockRange balanced_block(std::size_t n, std::size_t parts, std::size_t index) {
  const std::size_t base = n / parts;
  const std::size_t extra = n % parts;
  return {index * base + std::min(index, extra), base + (index < extra ? 1 : 0)};
}

BlockLayout split_layout(const Shape& global, const std::vector<AxisSplit>& splits) {
  std::size_t ranks = 1;
  for (const auto& s : splits) ranks *= s.parts;

  BlockLayout layout{global, {}};
  layout.boxes.reserve(ranks);
  for (std::size_t r = 0; r < ranks; ++r) {
    Box box{Shape(global.size(), 0), global};
    std::size_t rest = r;
    for (std::size_t i = splits.size(); i-- > 0;) {
      const std::size_t coord = rest % splits[i].parts;
      rest /= splits[i].parts;
      const BlockRange range = balanced_block(global[splits[i].axis], splits[i].parts, coord);
      box.offset[splits[i].axis] = range.offset;
      box.extent[splits[i].axis] = range.count;
    }
    layout.boxes.push_back(std::move(box));
  }
  return layout;
}

BlockLayout root_layout(const Shape& global, std::size_t ranks) {
  BlockLayout layout{global, {}};
  layout.boxes.push_back(Box{Shape(global.size(), 0), global});
  for (std::size_t r = 1; r < ranks; ++r) {
    layout.boxes.push_back(Box{Shape(global.size(), 0), Shape(global.size(), 0)});
  }
  return layout;
}

Box intersect(const Box& a, const Box& b) {
  Box out{Shape(a.offset.size(), 0), Shape(a.offset.size(), 0)};
  for (std::size_t i = 0; i < a.offset.size(); ++i) {
    const std::size_t lo = std::max(a.offset[i], b.offset[i]);
    const std::size_t hi = std::min(a.offset[i] + a.extent[i], b.offset[i] + b.extent[i]);
    if (hi <= lo) return Box{Shape(a.offset.size(), 0), Shape(a.offset.size(), 0)};
    out.offset[i] = lo;
    out.extent[i] = hi - lo;
  }
  return out;
}

namespace detail {

void check_layouts(const BlockLayout& from, const BlockLayout& to, int size, int rank,
                   std::size_t local_size, std::size_t out_size) {
  const auto n = static_cast<std::size_t>(size);
  if (from.boxes.size() != n || to.boxes.size() != n) {
    throw LayoutMismatch("layouts describe " + std::to_string(from.boxes.size()) + " and " +
                         std::to_string(to.boxes.size()) + " ranks, world has " + std::to_string(size));
  }
  if (from.global != to.global) throw LayoutMismatch("layouts cover different global shapes");
  const auto r = static_cast<std::size_t>(rank);
  if (from.boxes[r].count() != local_size) {
    throw LayoutMismatch("rank " + std::to_string(rank) + " input block has " +
                         std::to_string(local_size) + " values, layout expects " +
                         std::to_string(from.boxes[r].count()));
  }
  if (to.boxes[r].count() != out_size) {
    throw LayoutMismatch("rank " + std::to_string(rank) + " output block has " +
                         std::to_string(out_size) + " values, layout expects " +
                         std::to_string(to.boxes[r].count()));
  }
}

}  // namespace detail

std::vector<Complex> transpose_exchange(Communicator& comm, std::span<const Complex> local_block,
                                        const BlockLayout& layout_from, const BlockLayout& layout_to) {
  const auto rank = static_cast<std::size_t>(comm.rank());
  std::vector<Complex> out(rank < layout_to.boxes.size() ? layout_to.boxes[rank].count() : 0);
  redistribute<Complex>(comm, layout_from, layout_to, local_block, out);
  return out;
}

}  // namespace unifft
