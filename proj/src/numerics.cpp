#include "covosc/numerics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace covosc {

namespace {

constexpr double kPi = std::numbers::pi;
// pi^{-1/4}
const double kChi0 = std::pow(kPi, -0.25);

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw IntegrationError(std::string("non-finite integrand value in ") + what);
  }
}

}  // namespace

void FiniteDifferenceScheme::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  if (order != 2 && order != 4) {
    throw std::invalid_argument("finite-difference order must be 2 or 4");
  }
}

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: n must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chi(int n, double x) {
  if (n < 0) throw std::invalid_argument("chi: n must be nonnegative");
  double prev = 0.0;
  double cur = kChi0 * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    // chi_{k+1} = x sqrt(2/(k+1)) chi_k - sqrt(k/(k+1)) chi_{k-1}
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

void chi_sequence(double x, std::vector<double>& out) {
  if (out.empty()) return;
  out[0] = kChi0 * std::exp(-0.5 * x * x);
  if (out.size() == 1) return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    out[k + 1] = x * std::sqrt(2.0 / (kd + 1)) * out[k] - std::sqrt(kd / (kd + 1)) * out[k - 1];
  }
}

namespace {

// chi_n(x) and chi_{n-1}(x) in one pass. At a zero of H_n these give both the
// Newton step H_n / H_n' = chi_n / (sqrt(2n) chi_{n-1}) and the weights,
// with the exp(-x^2/2) factors cancelling instead of overflowing.
std::pair<double, double> chi_pair(int n, double x) {
  double prev = 0.0;
  double cur = kChi0 * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double next =
        x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

QuadratureRule gauss_quadrature(int order) {
  if (order < 2) throw std::invalid_argument("gauss_quadrature: order must be >= 2");
  if (order > kMaxGaussOrder) {
    throw std::invalid_argument("gauss_quadrature: order must be <= " +
                                std::to_string(kMaxGaussOrder));
  }
  const int n = order;

  // Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
  // orthonormal Hermite recurrence.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.kind = QuadratureKind::GaussHermite;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const auto [cn, cm] = chi_pair(n, x);
      x -= cn / (std::sqrt(2.0 * n) * cm);
    }
    rule.nodes[i] = x;
  }
  // Exact symmetry about the origin.
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    rule.nodes[i] = -a;
    rule.nodes[n - 1 - i] = a;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;

  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    const double cm = chi_pair(n, x).second;
    // w = 1 / (n p_{n-1}^2) with p the orthonormal polynomial, p = chi exp(x^2/2)
    rule.weights[i] = std::exp(-x * x) / (n * cm * cm);
  }
  return rule;
}

QuadratureRule fold_weight(const QuadratureRule& rule) {
  if (rule.kind != QuadratureKind::GaussHermite) {
    throw std::invalid_argument("fold_weight: rule must be GaussHermite");
  }
  QuadratureRule folded = rule;
  folded.kind = QuadratureKind::GaussHermiteFolded;
  const int n = static_cast<int>(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double cm = chi_pair(n, rule.nodes[i]).second;
    folded.weights[i] = 1.0 / (n * cm * cm);
  }
  return folded;
}

QuadratureRule trapezoid_rule(double lo, double hi, std::size_t points) {
  if (points < 2) throw std::invalid_argument("trapezoid_rule: need at least 2 points");
  if (!(hi > lo)) throw std::invalid_argument("trapezoid_rule: empty interval");
  QuadratureRule rule;
  rule.kind = QuadratureKind::Trapezoid;
  rule.nodes.resize(points);
  rule.weights.assign(points, 0.0);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    rule.nodes[i] = lo + h * static_cast<double>(i);
    rule.weights[i] = (i == 0 || i + 1 == points) ? 0.5 * h : h;
  }
  rule.nodes.back() = hi;
  return rule;
}

QuadratureRule boosted_trapezoid(double eta, std::size_t min_points) {
  const double width = std::sqrt(std::cosh(2.0 * eta));
  const double half = 8.0 * width;
  const double max_step = 0.25 / width;
  const auto needed = static_cast<std::size_t>(std::ceil(2.0 * half / max_step)) + 1;
  std::size_t points = std::max(needed, min_points);
  if (points % 2 == 0) ++points;  // keep a node at the origin
  return trapezoid_rule(-half, half, points);
}

double integrate_1d(const std::function<double(double)>& f, const QuadratureRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    check_finite(v, "integrate_1d");
    sum += rule.weights[i] * v;
  }
  return sum;
}

double integrate_2d(const std::function<double(double, double)>& f, const QuadratureRule& rule) {
  return integrate_2d(f, rule, rule);
}

double integrate_2d(const std::function<double(double, double)>& f, const QuadratureRule& rule_x,
                    const QuadratureRule& rule_y) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule_x.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < rule_y.size(); ++j) {
      const double v = f(rule_x.nodes[i], rule_y.nodes[j]);
      check_finite(v, "integrate_2d");
      row += rule_y.weights[j] * v;
    }
    sum += rule_x.weights[i] * row;
  }
  return sum;
}

std::vector<double> second_derivative_stencil(int order) {
  if (order == 2) return {1.0, -2.0, 1.0};
  if (order == 4) return {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
  throw std::invalid_argument("finite-difference order must be 2 or 4");
}

double second_derivative(const std::function<double(double)>& f, double x,
                         const FiniteDifferenceScheme& scheme) {
  scheme.validate();
  const double h = scheme.step;
  if (scheme.order == 2) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  }
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

std::string to_string(QuadratureKind kind) {
  switch (kind) {
    case QuadratureKind::GaussHermite:
      return "gauss-hermite";
    case QuadratureKind::GaussHermiteFolded:
      return "gauss-hermite-folded";
    case QuadratureKind::Trapezoid:
      return "trapezoid";
  }
  return "unknown";
}

}  // namespace covosc
