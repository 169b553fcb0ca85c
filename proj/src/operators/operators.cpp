#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "unifft/errors.hpp"
#include "unifft/operators.hpp"

namespace unifft {

namespace {

void check_spectral(const OperatorGrid& og, const SpectralField& f, const char* what) {
  if (f.shape != og.shape_K_loc || f.data.size() != og.K2.size()) {
    throw ShapeError(std::string(what) + " does not match the operator's spectral shape");
  }
}

void check_vector(const OperatorGrid& og, const SpectralVector& v, const char* what) {
  if (v.size() != og.ndim()) {
    throw ShapeError(std::string(what) + " needs " + std::to_string(og.ndim()) + " components, got " +
                     std::to_string(v.size()));
  }
  for (const auto& c : v) check_spectral(og, c, what);
}

Complex times_i(double k, Complex v) { return {-k * v.imag(), k * v.real()}; }

// tmp = (k.v) / |k|^2 at mode i, following the vectorized formula exactly.
Complex projection_factor(const OperatorGrid& og, const SpectralVector& v, std::size_t i) {
  Complex dot = og.KX[i] * v[0].data[i] + og.KY[i] * v[1].data[i];
  if (og.ndim() == 3) dot += og.KZ[i] * v[2].data[i];
  return dot * og.inv_k_square_nozero[i];
}

}  // namespace

SpectralVector gradfft_from_fft(const OperatorGrid& og, const SpectralField& u_fft) {
  check_spectral(og, u_fft, "gradfft_from_fft input");
  SpectralVector out;
  for (std::size_t c = 0; c < og.ndim(); ++c) {
    const auto& k = og.wavenumbers(c);
    SpectralField comp{u_fft.grid, u_fft.shape, std::vector<Complex>(u_fft.data.size())};
    for (std::size_t i = 0; i < comp.data.size(); ++i) comp.data[i] = times_i(k[i], u_fft.data[i]);
    out.push_back(std::move(comp));
  }
  return out;
}

SpectralField divfft_from_vecfft(const OperatorGrid& og, const SpectralVector& v_fft) {
  check_vector(og, v_fft, "divfft_from_vecfft input");
  SpectralField out{v_fft[0].grid, v_fft[0].shape, std::vector<Complex>(v_fft[0].data.size())};
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    Complex sum = og.KX[i] * v_fft[0].data[i] + og.KY[i] * v_fft[1].data[i];
    if (og.ndim() == 3) sum += og.KZ[i] * v_fft[2].data[i];
    out.data[i] = times_i(1.0, sum);
  }
  return out;
}

SpectralVector proj_outplace(const OperatorGrid& og, const SpectralVector& v_fft) {
  check_vector(og, v_fft, "proj_outplace input");
  SpectralVector out;
  for (const auto& c : v_fft) out.push_back(SpectralField{c.grid, c.shape, std::vector<Complex>(c.data.size())});
  const std::size_t nd = og.ndim();
  for (std::size_t i = 0; i < og.K2.size(); ++i) {
    if (og.inv_k_square_nozero[i] == 0.0) {
      for (std::size_t c = 0; c < nd; ++c) out[c].data[i] = v_fft[c].data[i];
      continue;
    }
    const Complex tmp = projection_factor(og, v_fft, i);
    for (std::size_t c = 0; c < nd; ++c) out[c].data[i] = v_fft[c].data[i] - og.wavenumbers(c)[i] * tmp;
  }
  return out;
}

void proj_inplace(const OperatorGrid& og, SpectralVector& v_fft) {
  check_vector(og, v_fft, "proj_inplace input");
  const std::size_t nd = og.ndim();
  for (std::size_t i = 0; i < og.K2.size(); ++i) {
    if (og.inv_k_square_nozero[i] == 0.0) continue;
    const Complex tmp = projection_factor(og, v_fft, i);
    for (std::size_t c = 0; c < nd; ++c) v_fft[c].data[i] -= og.wavenumbers(c)[i] * tmp;
  }
}

double energy_K_local(const OperatorGrid& og, const SpectralField& u_fft) {
  check_spectral(og, u_fft, "energy_K_local input");
  double sum = 0.0;
  for (std::size_t i = 0; i < u_fft.data.size(); ++i) sum += og.hermitian_weights[i] * std::norm(u_fft.data[i]);
  return 0.5 * sum;
}

double default_shell_width(const OperatorGrid& og) {
  double dk = 0.0;
  for (double length : og.grid.lengths()) {
    const double spacing = 2.0 * std::numbers::pi / length;
    dk = dk == 0.0 ? spacing : std::min(dk, spacing);
  }
  return dk;
}

std::vector<ShellBin> spectrum_shell(const OperatorGrid& og, const SpectralField& u_fft, double dk) {
  check_spectral(og, u_fft, "spectrum_shell input");
  if (!(dk > 0.0) || !std::isfinite(dk)) throw ShapeError("spectrum_shell: dk must be positive");

  double kmax2 = 0.0;
  for (std::size_t a = 0; a < og.ndim(); ++a) {
    const double kmax = 2.0 * std::numbers::pi / og.grid.lengths()[a] * static_cast<double>(og.grid.dims()[a] / 2);
    kmax2 += kmax * kmax;
  }
  const auto nbins = static_cast<std::size_t>(std::floor(std::sqrt(kmax2) / dk)) + 1;

  std::vector<ShellBin> bins(nbins);
  for (std::size_t b = 0; b < nbins; ++b) bins[b] = {(static_cast<double>(b) + 0.5) * dk, 0.0};
  for (std::size_t i = 0; i < u_fft.data.size(); ++i) {
    const auto b = std::min(nbins - 1, static_cast<std::size_t>(std::floor(std::sqrt(og.K2[i]) / dk)));
    bins[b].energy += 0.5 * og.hermitian_weights[i] * std::norm(u_fft.data[i]);
  }
  return bins;
}

std::optional<std::vector<ShellBin>> spectrum_shell(const OperatorGrid& og, const SpectralField& u_fft,
                                                    double dk, Communicator& comm) {
  auto local = spectrum_shell(og, u_fft, dk);
  std::vector<double> energies(local.size());
  for (std::size_t b = 0; b < local.size(); ++b) energies[b] = local[b].energy;
  const auto gathered = gather(comm, std::span<const double>(energies));
  if (comm.rank() != 0) return std::nullopt;
  for (auto& bin : local) bin.energy = 0.0;
  for (const auto& part : gathered) {
    for (std::size_t b = 0; b < local.size(); ++b) local[b].energy += part[b];
  }
  return local;
}

}  // namespace unifft
