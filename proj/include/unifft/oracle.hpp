#pragma once

#include "unifft/grid.hpp"

namespace unifft {

/// Direct evaluation of the forward-normalized DFT for every stored
/// half-spectrum mode. O(N^2); used only to validate backends.
SpectralField naive_dft_r2c(const GridSpec& grid, const RealField& input);

}  // namespace unifft
