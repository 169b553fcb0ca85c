#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unifft/backend.hpp"
#include "unifft/comm.hpp"
#include "unifft/decomposition.hpp"
#include "unifft/grid.hpp"

namespace unifft {

/**
 * Distributed real-to-complex transform built from sequential line
 * transforms and all-to-all redistributions.
 *
 * Forward, slab: r2c along the last axis, c2c along axis 1 (3D), transpose so
 * axis 0 is local, c2c along axis 0.
 * Forward, pencil: r2c along axis 2, transpose (axis 1 local), c2c along
 * axis 1, transpose (axis 0 local), c2c along axis 0.
 * The inverse runs the same steps backwards. Normalization matches FftPlan.
 *
 * Every rank constructs its own plan with identical arguments. Transforms
 * are collective.
 */
class DistPlan {
 public:
  DistPlan(const Backend& backend, GridSpec grid, DecompKind kind, Communicator& comm);
  ~DistPlan();
  DistPlan(DistPlan&&) noexcept;
  DistPlan& operator=(DistPlan&&) = delete;

  const std::string& backend_id() const noexcept { return backend_id_; }
  const GridSpec& grid() const noexcept { return grid_; }
  const DecompositionInfo& decomposition() const noexcept { return info_; }
  const DecompositionLayouts& layouts() const noexcept { return layouts_; }
  Communicator& context() const noexcept { return comm_; }

  /// Unchecked collective transforms on this rank's blocks.
  void forward(std::span<const double> in, std::span<Complex> out);
  void backward(std::span<const Complex> in, std::span<double> out);

 private:
  std::string backend_id_;
  GridSpec grid_;
  Communicator& comm_;
  DecompositionInfo info_;
  DecompositionLayouts layouts_;
  std::vector<std::unique_ptr<LineTransform>> lines_;
  std::vector<Complex> stage_a_;  // physical_complex block
  std::vector<Complex> stage_b_;  // intermediate block (pencil)
  std::vector<Complex> work_;     // spectral block copy for the inverse
  std::vector<Complex> line_scratch_;
};

/// Throws BackendUnavailable, InvalidGrid or BadParameters.
DistPlan create_dist_plan(std::string_view backend_id, const GridSpec& grid, DecompKind kind,
                          Communicator& comm);

/// Zero-filled blocks with this rank's local shapes.
RealField make_local_real_field(const DistPlan& plan);
SpectralField make_local_spectral_field(const DistPlan& plan);

/// Collective; ShapeError when blocks do not match the local shapes.
void dist_fft(DistPlan& plan, const RealField& local_input, SpectralField& local_output);
SpectralField dist_fft_alloc(DistPlan& plan, const RealField& local_input);
void dist_ifft(DistPlan& plan, const SpectralField& local_input, RealField& local_output);
RealField dist_ifft_alloc(DistPlan& plan, const SpectralField& local_input);

/// Assembles the global physical field on rank 0; other ranks get nullopt.
std::optional<RealField> gather_X(Communicator& comm, const DecompositionInfo& decomposition,
                                  const RealField& local_block);
/// Inverse of gather_X: `global` is only read on rank 0.
RealField scatter_X(Communicator& comm, const DecompositionInfo& decomposition, const GridSpec& grid,
                    const std::optional<RealField>& global);

/// Spectral counterparts, over the spectral layout.
std::optional<SpectralField> gather_K(Communicator& comm, const DecompositionInfo& decomposition,
                                      const SpectralField& local_block);
SpectralField scatter_K(Communicator& comm, const DecompositionInfo& decomposition,
                        const GridSpec& grid, const std::optional<SpectralField>& global);

}  // namespace unifft
