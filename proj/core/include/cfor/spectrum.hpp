#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cfor/kernel.hpp"

namespace cfor::dsc {

/// Transfer function of a tap set, sampled on omega in [0, pi/delta].
///
/// response[k] = delta^q * sum_j c_j exp(-i w_k o_j pi) with w_k = omega_over_pi[k],
/// so that the ideal response is 1, i*w*pi and -(w*pi)^2 for q = 0, 1, 2.
struct FrequencyResponse {
  int order = 0;
  std::vector<double> omega_over_pi;
  std::vector<std::complex<double>> response;
  std::vector<std::complex<double>> ideal;

  std::size_t size() const { return response.size(); }
  double magnitude(std::size_t k) const { return std::abs(response[k]); }
  double ideal_magnitude(std::size_t k) const { return std::abs(ideal[k]); }
  /// |H / ideal - 1|; at omega = 0 for q >= 1 the absolute |H| is returned.
  double relative_error(std::size_t k) const;
};

/// Throws std::invalid_argument if n_samples < 2.
FrequencyResponse frequency_response(const KernelCoefficients& coeffs, std::size_t n_samples);

/// `offset,value`
void write_taps_csv(std::ostream& os, const KernelCoefficients& coeffs);

/// `omega_over_pi,magnitude,ideal_magnitude`
void write_spectrum_csv(std::ostream& os, const FrequencyResponse& response);

}  // namespace cfor::dsc
