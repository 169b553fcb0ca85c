#include "unifft/dist_plan.hpp"

#include <algorithm>
#include <string>

#include "unifft/detail/lines.hpp"
#include "unifft/errors.hpp"
#include "unifft/redistribute.hpp"

namespace unifft {

namespace {

std::size_t local_count(const BlockLayout& layout, int rank) {
  if (layout.boxes.empty()) return 0;
  return layout.boxes[static_cast<std::size_t>(rank)].count();
}

const Shape& local_extent(const BlockLayout& layout, int rank) {
  return layout.boxes[static_cast<std::size_t>(rank)].extent;
}

}  // namespace

DistPlan::DistPlan(const Backend& backend, GridSpec grid, DecompKind kind, Communicator& comm)
    : backend_id_(backend.id()),
      grid_(std::move(grid)),
      comm_(comm),
      info_(make_decomposition(kind, grid_, comm)),
      layouts_(make_layouts(kind, grid_.dims(), static_cast<std::size_t>(comm.size()))) {
  std::size_t longest = 0;
  for (std::size_t n : grid_.dims()) {
    lines_.push_back(backend.make_line(n));
    longest = std::max(longest, n);
  }
  stage_a_.resize(local_count(layouts_.physical_complex, comm.rank()));
  stage_b_.resize(local_count(layouts_.intermediate, comm.rank()));
  work_.resize(local_count(layouts_.spectral, comm.rank()));
  line_scratch_.resize(2 * longest);
}

DistPlan::~DistPlan() = default;
DistPlan::DistPlan(DistPlan&&) noexcept = default;

void DistPlan::forward(std::span<const double> in, std::span<Complex> out) {
  const int rank = comm_.rank();
  const std::size_t last = grid_.ndim() - 1;
  const Shape& shape_a = local_extent(layouts_.physical_complex, rank);
  const std::size_t n_last = grid_.dims()[last];
  const std::size_t rows = n_last == 0 ? 0 : element_count(local_extent(layouts_.physical, rank)) / n_last;
  detail::r2c_rows(*lines_[last], rows, in, stage_a_);

  if (info_.kind == DecompKind::slab) {
    if (grid_.ndim() == 3) {
      detail::c2c_axis(*lines_[1], stage_a_, shape_a, 1, Direction::forward, line_scratch_);
    }
    redistribute<Complex>(comm_, layouts_.physical_complex, layouts_.spectral, stage_a_, out);
  } else {
    redistribute<Complex>(comm_, layouts_.physical_complex, layouts_.intermediate, stage_a_, stage_b_);
    detail::c2c_axis(*lines_[1], stage_b_, local_extent(layouts_.intermediate, rank), 1,
                     Direction::forward, line_scratch_);
    redistribute<Complex>(comm_, layouts_.intermediate, layouts_.spectral, stage_b_, out);
  }
  detail::c2c_axis(*lines_[0], out, local_extent(layouts_.spectral, rank), 0, Direction::forward,
                   line_scratch_);
  detail::scale(out, 1.0 / static_cast<double>(grid_.size()));
}

void DistPlan::backward(std::span<const Complex> in, std::span<double> out) {
  const int rank = comm_.rank();
  const std::size_t last = grid_.ndim() - 1;
  std::copy(in.begin(), in.end(), work_.begin());
  detail::c2c_axis(*lines_[0], work_, local_extent(layouts_.spectral, rank), 0, Direction::backward,
                   line_scratch_);

  if (info_.kind == DecompKind::slab) {
    redistribute<Complex>(comm_, layouts_.spectral, layouts_.physical_complex, work_, stage_a_);
    if (grid_.ndim() == 3) {
      detail::c2c_axis(*lines_[1], stage_a_, local_extent(layouts_.physical_complex, rank), 1,
                       Direction::backward, line_scratch_);
    }
  } else {
    redistribute<Complex>(comm_, layouts_.spectral, layouts_.intermediate, work_, stage_b_);
    detail::c2c_axis(*lines_[1], stage_b_, local_extent(layouts_.intermediate, rank), 1,
                     Direction::backward, line_scratch_);
    redistribute<Complex>(comm_, layouts_.intermediate, layouts_.physical_complex, stage_b_, stage_a_);
  }
  const std::size_t n_last = grid_.dims()[last];
  const std::size_t rows = element_count(local_extent(layouts_.physical, rank)) / n_last;
  detail::c2r_rows(*lines_[last], rows, stage_a_, out);
}

DistPlan create_dist_plan(std::string_view backend_id, const GridSpec& grid, DecompKind kind,
                          Communicator& comm) {
  return DistPlan(find_backend(backend_id), grid, kind, comm);
}

RealField make_local_real_field(const DistPlan& plan) {
  const Shape& shape = plan.decomposition().shapeX_loc;
  return RealField{plan.grid(), shape, std::vector<double>(element_count(shape), 0.0)};
}

SpectralField make_local_spectral_field(const DistPlan& plan) {
  const Shape& shape = plan.decomposition().shapeK_loc;
  return SpectralField{plan.grid(), shape, std::vector<Complex>(element_count(shape))};
}

namespace {

template <typename T>
void check_block(const Field<T>& field, const Shape& expected, const char* what) {
  if (field.shape != expected || field.data.size() != element_count(expected)) {
    throw ShapeError(std::string(what) + " does not match this rank's block shape");
  }
}

template <typename T>
std::optional<Field<T>> gather_block(Communicator& comm, const BlockLayout& layout,
                                     const Field<T>& local) {
  const BlockLayout root = root_layout(layout.global, static_cast<std::size_t>(comm.size()));
  std::vector<T> assembled(comm.rank() == 0 ? element_count(layout.global) : 0);
  redistribute<T>(comm, layout, root, local.data, assembled);
  if (comm.rank() != 0) return std::nullopt;
  return Field<T>{local.grid, layout.global, std::move(assembled)};
}

template <typename T>
Field<T> scatter_block(Communicator& comm, const BlockLayout& layout, const GridSpec& grid,
                       const std::optional<Field<T>>& global) {
  const BlockLayout root = root_layout(layout.global, static_cast<std::size_t>(comm.size()));
  const Box& mine = layout.boxes[static_cast<std::size_t>(comm.rank())];
  Field<T> local{grid, mine.extent, std::vector<T>(mine.count())};
  std::span<const T> source;
  if (comm.rank() == 0) {
    if (!global || global->shape != layout.global) {
      throw ShapeError("scatter: rank 0 must provide the global field");
    }
    source = global->data;
  }
  redistribute<T>(comm, root, layout, source, local.data);
  return local;
}

}  // namespace

void dist_fft(DistPlan& plan, const RealField& local_input, SpectralField& local_output) {
  check_block(local_input, plan.decomposition().shapeX_loc, "dist_fft input");
  check_block(local_output, plan.decomposition().shapeK_loc, "dist_fft output");
  plan.forward(local_input.data, local_output.data);
}

SpectralField dist_fft_alloc(DistPlan& plan, const RealField& local_input) {
  SpectralField out = make_local_spectral_field(plan);
  dist_fft(plan, local_input, out);
  return out;
}

void dist_ifft(DistPlan& plan, const SpectralField& local_input, RealField& local_output) {
  check_block(local_input, plan.decomposition().shapeK_loc, "dist_ifft input");
  check_block(local_output, plan.decomposition().shapeX_loc, "dist_ifft output");
  plan.backward(local_input.data, local_output.data);
}

RealField dist_ifft_alloc(DistPlan& plan, const SpectralField& local_input) {
  RealField out = make_local_real_field(plan);
  dist_ifft(plan, local_input, out);
  return out;
}

std::optional<RealField> gather_X(Communicator& comm, const DecompositionInfo& decomposition,
                                  const RealField& local_block) {
  const auto layouts = make_layouts(decomposition.kind, decomposition.shapeX_seq,
                                    static_cast<std::size_t>(comm.size()));
  check_block(local_block, layouts.physical.boxes[static_cast<std::size_t>(comm.rank())].extent, "gather_X block");
  return gather_block(comm, layouts.physical, local_block);
}

RealField scatter_X(Communicator& comm, const DecompositionInfo& decomposition, const GridSpec& grid,
                    const std::optional<RealField>& global) {
  const auto layouts = make_layouts(decomposition.kind, decomposition.shapeX_seq,
                                    static_cast<std::size_t>(comm.size()));
  return scatter_block(comm, layouts.physical, grid, global);
}

std::optional<SpectralField> gather_K(Communicator& comm, const DecompositionInfo& decomposition,
                                      const SpectralField& local_block) {
  const auto layouts = make_layouts(decomposition.kind, decomposition.shapeX_seq,
                                    static_cast<std::size_t>(comm.size()));
  check_block(local_block, layouts.spectral.boxes[static_cast<std::size_t>(comm.rank())].extent, "gather_K block");
  return gather_block(comm, layouts.spectral, local_block);
}

SpectralField scatter_K(Communicator& comm, const DecompositionInfo& decomposition,
                        const GridSpec& grid, const std::optional<SpectralField>& global) {
  const auto layouts = make_layouts(decomposition.kind, decomposition.shapeX_seq,
                                    static_cast<std::size_t>(comm.size()));
  return scatter_block(comm, layouts.spectral, grid, global);
}

}  // namespace unifft
