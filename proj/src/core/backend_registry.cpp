#include <string>

#include "backends.hpp"
#include "unifft/errors.hpp"

namespace unifft {

namespace {

std::vector<const Backend*> registry() {
  std::vector<const Backend*> out{&backends::fast(), &backends::naive()};
#ifdef UNIFFT_WITH_FFTW
  out.push_back(&backends::fftw());
#endif
  return out;
}

}  // namespace

const Backend& find_backend(std::string_view id) {
  for (const Backend* b : registry()) {
    if (b->id() == id) return *b;
  }
  throw BackendUnavailable("backend '" + std::string(id) + "' is not available");
}

std::vector<std::string> available_backends() {
  std::vector<std::string> ids;
  for (const Backend* b : registry()) ids.emplace_back(b->id());
  return ids;
}

std::string default_backend() { return available_backends().front(); }

}  // namespace unifft
