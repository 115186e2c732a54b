#include "cfor/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cfor/csv.hpp"

namespace cfor::dsc {

double FrequencyResponse::relative_error(std::size_t k) const {
  if (std::abs(ideal[k]) == 0.0) return std::abs(response[k]);
  return std::abs(response[k] / ideal[k] - 1.0);
}

FrequencyResponse frequency_response(const KernelCoefficients& coeffs, std::size_t n_samples) {
  if (n_samples < 2) throw std::invalid_argument("frequency_response: need at least 2 samples");
  constexpr double pi = std::numbers::pi;
  const int q = coeffs.params.order;
  const double unit = std::pow(coeffs.params.delta, q);

  FrequencyResponse fr;
  fr.order = q;
  fr.omega_over_pi.resize(n_samples);
  fr.response.resize(n_samples);
  fr.ideal.resize(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double w = static_cast<double>(k) / static_cast<double>(n_samples - 1);
    const double omega = w * pi;  // dimensionless omega * delta
    std::complex<double> h{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      h += coeffs.values[j] * std::polar(1.0, -omega * coeffs.offsets[j]);
    fr.omega_over_pi[k] = w;
    fr.response[k] = h * unit;
    switch (q) {
      case 0: fr.ideal[k] = 1.0; break;
      case 1: fr.ideal[k] = {0.0, omega}; break;
      default: fr.ideal[k] = -omega * omega; break;
    }
  }
  return fr;
}

void write_taps_csv(std::ostream& os, const KernelCoefficients& coeffs) {
  os << "offset,value\n";
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    os << csv::num(coeffs.offsets[j]) << ',' << csv::num(coeffs.values[j]) << '\n';
}

void write_spectrum_csv(std::ostream& os, const FrequencyResponse& response) {
  os << "omega_over_pi,magnitude,ideal_magnitude\n";
  for (std::size_t k = 0; k < response.size(); ++k)
    os << csv::num(response.omega_over_pi[k]) << ',' << csv::num(response.magnitude(k)) << ','
       << csv::num(response.ideal_magnitude(k)) << '\n';
}

}  // namespace cfor::dsc
