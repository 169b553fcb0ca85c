#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "unifft/comm.hpp"
#include "unifft/grid.hpp"
#include "unifft/layout.hpp"

namespace unifft {

enum class DecompKind { slab, pencil };

std::string_view to_string(DecompKind kind);
/// Throws BadParameters for anything other than "slab" or "pencil".
DecompKind parse_decomp_kind(std::string_view text);

/**
 * Canonical 2D process grid for `size` ranks: p0 is the largest divisor of
 * size with p0 * p0 <= size, p1 = size / p0.
 */
struct ProcessGrid {
  std::size_t p0;
  std::size_t p1;
};
ProcessGrid pencil_process_grid(std::size_t size);

/**
 * True when `dims` cannot be decomposed over `size` ranks.
 *
 * Slab decompositions accept any size >= 1: ranks beyond the axis length
 * hold empty blocks. Pencil decompositions need a 3D grid and the canonical
 * process grid must satisfy p0 <= dims[0] and p1 <= dims[1].
 */
bool are_parameters_bad(DecompKind kind, const Shape& dims, std::size_t size);

/// Layouts of one distributed transform for every rank.
///
/// Physical arrays are split along axis 0 (slab) or axes 0 and 1 (pencil).
/// Spectral arrays keep the natural axis order (n0, n1, n2/2+1) but are split
/// along axis 1 (slab) or axes 1 and 2 (pencil), so axis 0 is local there.
struct DecompositionLayouts {
  BlockLayout physical;          // real input
  BlockLayout physical_complex;  // after the last-axis r2c
  BlockLayout intermediate;      // pencil only: axis 1 local
  BlockLayout spectral;
};
DecompositionLayouts make_layouts(DecompKind kind, const Shape& dims, std::size_t size);

/// This rank's view of a decomposition.
struct DecompositionInfo {
  DecompKind kind;
  std::vector<std::size_t> proc_grid;  // {size} or {p0, p1}
  int rank;
  int size;
  Shape shapeX_seq;
  Shape shapeX_loc;
  Shape offsetX_loc;
  Shape shapeK_seq;
  Shape shapeK_loc;
  Shape offsetK_loc;
};

/// Throws BadParameters when are_parameters_bad holds.
DecompositionInfo make_decomposition(DecompKind kind, const GridSpec& grid, const Communicator& comm);

}  // namespace unifft
