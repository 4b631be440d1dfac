#pragma once

/**
 * @file numerics.hpp
 * @brief Hermite functions, quadrature rules and finite differences.
 *
 * Everything downstream is validated against the routines in this header,
 * so they are written to be independent of any closed form used elsewhere.
 *
 * Units are dimensionless throughout: oscillator frequency and the quantum
 * of action are both 1.
 */

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covosc {

/// Thrown when an integrand produces a non-finite value.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class QuadratureKind {
  /// sum w_i f(x_i) approximates the integral of f(x) exp(-x^2).
  GaussHermite,
  /// Gauss-Hermite with exp(x_i^2) folded into the weights; integrates plain f.
  GaussHermiteFolded,
  /// Composite trapezoid on a uniform grid over a finite interval.
  Trapezoid,
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  QuadratureKind kind = QuadratureKind::Trapezoid;

  std::size_t size() const { return nodes.size(); }
};

struct FiniteDifferenceScheme {
  double step = 1e-3;
  int order = 2;

  /// Throws std::invalid_argument unless step > 0 and order is 2 or 4.
  void validate() const;
};

/// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite(int n, double x);

/// Normalized oscillator eigenfunction
/// chi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} H_n(x) exp(-x^2/2).
/// Uses the normalized recurrence, so it stays finite for large n.
double chi(int n, double x);

/// Fills out[k] = chi_k(x) for k = 0..out.size()-1 in a single recurrence pass.
void chi_sequence(double x, std::vector<double>& out);

inline constexpr int kMaxGaussOrder = 300;

/// Gauss-Hermite rule of the given order (2 <= order <= kMaxGaussOrder), weight exp(-x^2).
QuadratureRule gauss_quadrature(int order);

/// Converts a GaussHermite rule so that it integrates unweighted functions.
QuadratureRule fold_weight(const QuadratureRule& rule);

/// Uniform-grid trapezoid on [lo, hi] with `points` >= 2 nodes.
QuadratureRule trapezoid_rule(double lo, double hi, std::size_t points);

/// Trapezoid rule sized for Gaussians squeezed by rapidity eta: half-width
/// 8 sqrt(cosh 2 eta), step at most 0.25 / sqrt(cosh 2 eta), and never fewer
/// than `min_points` nodes.
QuadratureRule boosted_trapezoid(double eta, std::size_t min_points = 2001);

/// Weighted sum of f over the rule. Throws IntegrationError on non-finite f.
double integrate_1d(const std::function<double(double)>& f, const QuadratureRule& rule);

/// Tensor-product version of integrate_1d.
double integrate_2d(const std::function<double(double, double)>& f, const QuadratureRule& rule);

/// Same as integrate_2d but with independent rules along each axis.
double integrate_2d(const std::function<double(double, double)>& f, const QuadratureRule& rule_x,
                    const QuadratureRule& rule_y);

/// Central-difference estimate of f''(x), error O(step^order).
double second_derivative(const std::function<double(double)>& f, double x,
                         const FiniteDifferenceScheme& scheme = {});

/// Central-difference stencil coefficients for f'' at offsets -k..k, in units of 1/h^2.
std::vector<double> second_derivative_stencil(int order);

std::string to_string(QuadratureKind kind);

}  // namespace covosc
