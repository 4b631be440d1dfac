#include "covosc/density_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "covosc/squeezed_states.hpp"

namespace covosc {

double pure_density(const OscillatorState& s, double z, double t, double zp, double tp) {
  return psi_boosted(s, z, t) * psi_boosted(s, zp, tp);
}

double reduced_closed(const ReducedDensityKernel& k, double z, double zp) {
  const double c = k.eta.cosh2();
  const double sum = z + zp;
  const double diff = z - zp;
  return std::exp(-0.25 * (sum * sum / c + diff * diff * c)) / std::sqrt(std::numbers::pi * c);
}

double reduced_numeric(Rapidity eta, double z, double zp, const QuadratureRule& rule) {
  const OscillatorState ground(0, eta);
  return integrate_1d(
      [&](double t) { return psi_boosted(ground, z, t) * psi_boosted(ground, zp, t); }, rule);
}

double reduced_numeric(Rapidity eta, double z, double zp) {
  return reduced_numeric(eta, z, zp, boosted_trapezoid(eta.value()));
}

double quark_distribution(const ReducedDensityKernel& k, double z) {
  const double c = k.eta.cosh2();
  return std::exp(-z * z / c) / std::sqrt(std::numbers::pi * c);
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double entropy_closed(Rapidity eta) {
  if (eta.value() == 0.0) return 0.0;
  const double sh = eta.sinh();
  return 2.0 * log_cosh(eta) - 2.0 * sh * sh * log_abs_tanh(eta);
}

SeriesEntropy entropy_series(Rapidity eta, int truncation, double tail_tolerance) {
  const std::vector<double> p = schmidt_probabilities(eta, truncation);
  SeriesEntropy out;
  for (double pk : p) out.value -= xlogx(pk);
  // exp(-inf) = 0 covers eta = 0
  out.tail_bound = std::exp(2.0 * (truncation + 1) * log_abs_tanh(eta));
  out.converged = out.tail_bound < tail_tolerance;
  return out;
}

PurityResult purity(Rapidity eta, const QuadratureRule& rule) {
  const ReducedDensityKernel k{eta};
  PurityResult r;
  r.numeric = integrate_2d(
      [&](double z, double zp) { return reduced_closed(k, z, zp) * reduced_closed(k, zp, z); },
      rule);
  r.closed = 1.0 / eta.cosh2();
  return r;
}

std::vector<double> kernel_spectrum(Rapidity eta, const QuadratureRule& rule, bool numeric_kernel) {
  const auto n = static_cast<Eigen::Index>(rule.size());
  const ReducedDensityKernel k{eta};
  const QuadratureRule t_rule = boosted_trapezoid(eta.value(), 129);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double zi = rule.nodes[static_cast<std::size_t>(i)];
    const double wi = std::sqrt(rule.weights[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double zj = rule.nodes[static_cast<std::size_t>(j)];
      const double wj = std::sqrt(rule.weights[static_cast<std::size_t>(j)]);
      const double rho = numeric_kernel ? reduced_numeric(eta, zi, zj, t_rule) : reduced_closed(k, zi, zj);
      m(i, j) = m(j, i) = wi * rho * wj;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace covosc
