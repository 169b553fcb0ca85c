#pragma once

#include <cstddef>
#include <vector>

#include "unifft/grid.hpp"

namespace unifft {

/// Half-open index box [offset, offset + extent) in a global array.
struct Box {
  Shape offset;
  Shape extent;

  std::size_t count() const { return element_count(extent); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Per-rank boxes of a global row-major array. boxes[r] belongs to rank r.
struct BlockLayout {
  Shape global;
  std::vector<Box> boxes;

  friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

/// Contiguous share of `n` items for part `index` of `parts`. Sizes differ by
/// at most one and the first n % parts parts get the larger share.
struct BlockRange {
  std::size_t offset;
  std::size_t count;
};
BlockRange balanced_block(std::size_t n, std::size_t parts, std::size_t index);

/// One axis split across a dimension of the process grid.
struct AxisSplit {
  std::size_t axis;
  std::size_t parts;
};

/**
 * Layout where each split axis is divided with balanced_block. Ranks are
 * numbered row-major over the process grid given by `splits`, so with
 * splits {a: p0, b: p1} rank r owns coordinate (r / p1, r % p1).
 */
BlockLayout split_layout(const Shape& global, const std::vector<AxisSplit>& splits);

/// Layout where rank 0 owns the whole array and every other rank is empty.
BlockLayout root_layout(const Shape& global, std::size_t ranks);

Box intersect(const Box& a, const Box& b);

}  // namespace unifft
