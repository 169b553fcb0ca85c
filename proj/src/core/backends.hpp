#pragma once

#include "unifft/backend.hpp"

namespace unifft::backends {

const Backend& naive();
const Backend& fast();
#ifdef UNIFFT_WITH_FFTW
const Backend& fftw();
#endif

}  // namespace unifft::backends
