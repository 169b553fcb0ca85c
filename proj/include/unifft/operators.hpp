#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unifft/comm.hpp"
#include "unifft/dist_plan.hpp"
#include "unifft/grid.hpp"
#include "unifft/plan.hpp"

namespace unifft {

/**
 * Wavenumber and coordinate arrays for the local part of a sequential or
 * distributed transform.
 *
 * Components follow the usual x-fastest convention: x is the last array axis
 * (the halved one in spectral space), y the one before it, and z axis 0 for
 * 3D grids. Wavenumbers along axis a are (2 pi / L_a) times the signed
 * frequency index in (-n_a/2, n_a/2]; the halved axis only stores m >= 0.
 *
 * Spectral arrays have the plan's local spectral shape, coordinate arrays
 * its local physical shape. Coordinates are x_j = j * L / n.
 */
struct OperatorGrid {
  GridSpec grid;
  Shape shape_X_loc;
  Shape offset_X_loc;
  Shape shape_K_loc;
  Shape offset_K_loc;

  std::vector<double> KX, KY, KZ;  // KZ empty in 2D
  std::vector<double> K2;
  std::vector<double> inv_k_square_nozero;  // 1/K2, 0 where K2 == 0
  std::vector<double> hermitian_weights;
  std::vector<double> XX, YY, ZZ;  // ZZ empty in 2D

  std::size_t ndim() const noexcept { return grid.ndim(); }

  /// Wavenumber array of vector component c (0 = x, 1 = y, 2 = z).
  const std::vector<double>& wavenumbers(std::size_t component) const;
};

OperatorGrid build_operator_grid(const FftPlan& plan);
OperatorGrid build_operator_grid(const DistPlan& plan);

/// Spectral vector field, components ordered x, y[, z].
using SpectralVector = std::vector<SpectralField>;

/// (i KX u, i KY u[, i KZ u]).
SpectralVector gradfft_from_fft(const OperatorGrid& og, const SpectralField& u_fft);

/// i (KX vx + KY vy [+ KZ vz]).
SpectralField divfft_from_vecfft(const OperatorGrid& og, const SpectralVector& v_fft);

/// Divergence-free projection v - k (k.v) / |k|^2, returned as new arrays.
/// The zero mode is copied through unchanged.
SpectralVector proj_outplace(const OperatorGrid& og, const SpectralVector& v_fft);

/// Same projection written into the input arrays. One scalar temporary per
/// mode, no heap allocation. Bitwise identical to proj_outplace.
void proj_inplace(const OperatorGrid& og, SpectralVector& v_fft);

/// 0.5 * sum of w_k |u_k|^2 over this rank's modes.
double energy_K_local(const OperatorGrid& og, const SpectralField& u_fft);

struct ShellBin {
  double k_center;
  double energy;
};

/// Smallest wavenumber spacing 2 pi / L over all axes.
double default_shell_width(const OperatorGrid& og);

/**
 * Shell-summed energy spectrum. Bin b collects 0.5 w_k |u_k|^2 for modes
 * with |k| in [b dk, (b+1) dk) and is centred at (b + 0.5) dk. The bin count
 * depends only on the global grid, so per-rank spectra can be summed.
 */
std::vector<ShellBin> spectrum_shell(const OperatorGrid& og, const SpectralField& u_fft, double dk);

/// Distributed spectrum: per-rank bins summed on rank 0 (nullopt elsewhere).
std::optional<std::vector<ShellBin>> spectrum_shell(const OperatorGrid& og, const SpectralField& u_fft,
                                                    double dk, Communicator& comm);

}  // namespace unifft
