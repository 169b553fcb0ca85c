#include "unifft/decomposition.hpp"

#include <string>

#include "unifft/errors.hpp"

namespace unifft {

std::string_view to_string(DecompKind kind) {
  return kind == DecompKind::slab ? "slab" : "pencil";
}

DecompKind parse_decomp_kind(std::string_view text) {
  if (text == "slab") return DecompKind::slab;
  if (text == "pencil") return DecompKind::pencil;
  throw BadParameters("unknown decomposition kind '" + std::string(text) + "'");
}

ProcessGrid pencil_process_grid(std::size_t size) {
  std::size_t p0 = 1;
  for (std::size_t d = 1; d * d <= size; ++d) {
    if (size % d == 0) p0 = d;
  }
  return {p0, size / p0};
}

bool are_parameters_bad(DecompKind kind, const Shape& dims, std::size_t size) {
  if (size < 1) return true;
  if (kind == DecompKind::slab) return false;
  if (dims.size() != 3) return true;
  const ProcessGrid pg = pencil_process_grid(size);
  return pg.p0 > dims[0] || pg.p1 > dims[1];
}

DecompositionLayouts make_layouts(DecompKind kind, const Shape& dims, std::size_t size) {
  const Shape half = half_spectrum_shape(dims);
  DecompositionLayouts out;
  if (kind == DecompKind::slab) {
    out.physical = split_layout(dims, {{0, size}});
    out.physical_complex = split_layout(half, {{0, size}});
    out.spectral = split_layout(half, {{1, size}});
  } else {
    const ProcessGrid pg = pencil_process_grid(size);
    out.physical = split_layout(dims, {{0, pg.p0}, {1, pg.p1}});
    out.physical_complex = split_layout(half, {{0, pg.p0}, {1, pg.p1}});
    out.intermediate = split_layout(half, {{0, pg.p0}, {2, pg.p1}});
    out.spectral = split_layout(half, {{1, pg.p0}, {2, pg.p1}});
  }
  return out;
}

DecompositionInfo make_decomposition(DecompKind kind, const GridSpec& grid, const Communicator& comm) {
  const auto size = static_cast<std::size_t>(comm.size());
  if (are_parameters_bad(kind, grid.dims(), size)) {
    throw BadParameters("cannot decompose grid over " + std::to_string(size) + " ranks as " +
                        std::string(to_string(kind)));
  }
  const DecompositionLayouts layouts = make_layouts(kind, grid.dims(), size);
  const auto r = static_cast<std::size_t>(comm.rank());
  DecompositionInfo info{};
  info.kind = kind;
  if (kind == DecompKind::slab) {
    info.proc_grid = {size};
  } else {
    const ProcessGrid pg = pencil_process_grid(size);
    info.proc_grid = {pg.p0, pg.p1};
  }
  info.rank = comm.rank();
  info.size = comm.size();
  info.shapeX_seq = layouts.physical.global;
  info.shapeX_loc = layouts.physical.boxes[r].extent;
  info.offsetX_loc = layouts.physical.boxes[r].offset;
  info.shapeK_seq = layouts.spectral.global;
  info.shapeK_loc = layouts.spectral.boxes[r].extent;
  info.offsetK_loc = layouts.spectral.boxes[r].offset;
  return info;
}

}  // namespace unifft
