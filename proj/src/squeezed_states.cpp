#include "covosc/squeezed_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "covosc/numerics.hpp"

namespace covosc {

NormalCoordinates normal_coordinates(double x1, double x2) {
  constexpr double s = 1.0 / std::numbers::sqrt2;
  return {s * (x1 + x2), s * (x1 - x2)};
}

double squeezed_vacuum(Rapidity eta, double x1, double x2) {
  const auto [y1, y2] = normal_coordinates(x1, x2);
  const double e2 = std::exp(2.0 * eta.value());
  const double em2 = std::exp(-2.0 * eta.value());
  return std::exp(-0.5 * (em2 * y1 * y1 + e2 * y2 * y2)) / std::sqrt(std::numbers::pi);
}

double log_abs_tanh(Rapidity eta) {
  const double a = std::abs(eta.value());
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  // tanh a = (1 - e^{-2a}) / (1 + e^{-2a})
  const double q = std::exp(-2.0 * a);
  return std::log1p(-q) - std::log1p(q);
}

double log_cosh(Rapidity eta) {
  const double a = std::abs(eta.value());
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

int default_truncation(Rapidity eta, double tail_tolerance, int cap) {
  if (eta.value() == 0.0) return 0;
  const double lt = log_abs_tanh(eta);
  const double k = std::ceil(std::log(tail_tolerance) / (2.0 * lt));
  return static_cast<int>(std::clamp(k, 0.0, static_cast<double>(cap)));
}

SchmidtExpansion expansion(Rapidity eta, int truncation) {
  if (truncation < 0) throw std::invalid_argument("expansion: truncation must be >= 0");
  SchmidtExpansion e{eta, truncation, std::vector<double>(truncation + 1, 0.0), 0.0};
  const double lt = log_abs_tanh(eta);
  const double lc = log_cosh(eta);
  const bool alternating = eta.value() < 0.0;
  e.coeffs[0] = std::exp(-lc);
  for (int k = 1; k <= truncation; ++k) {
    const double mag = std::exp(k * lt - lc);
    e.coeffs[k] = (alternating && k % 2 == 1) ? -mag : mag;
  }
  e.tail_bound = std::exp(2.0 * (truncation + 1) * lt);
  return e;
}

SchmidtExpansion expansion(Rapidity eta) { return expansion(eta, default_truncation(eta)); }

double reconstruct(const SchmidtExpansion& e, double x1, double x2) {
  const std::size_t terms = e.coeffs.size();
  std::vector<double> a(terms);
  std::vector<double> b(terms);
  chi_sequence(x1, a);
  chi_sequence(x2, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) sum += e.coeffs[k] * a[k] * b[k];
  return sum;
}

std::vector<double> schmidt_probabilities(Rapidity eta, int truncation) {
  if (truncation < 0) {
    throw std::invalid_argument("schmidt_probabilities: truncation must be >= 0");
  }
  std::vector<double> p(truncation + 1, 0.0);
  const double lt = log_abs_tanh(eta);
  const double lc = log_cosh(eta);
  p[0] = std::exp(-2.0 * lc);
  for (int k = 1; k <= truncation; ++k) p[k] = std::exp(2.0 * (k * lt - lc));
  return p;
}

}  // namespace covosc
